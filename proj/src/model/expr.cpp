#include "puiseux/error.hpp"
#include "puiseux/model.hpp"

#include <algorithm>

namespace puiseux::model {
namespace {

MonoidExpr wrap(Family f) {
  return MonoidExpr(std::make_shared<const MonoidExpr::Node>(MonoidExpr::Node{std::move(f)}));
}

void require_positive(const Rat& r, std::string_view what) {
  if (r.is_zero()) {
    throw Error(ErrorCode::Validation, std::string(what) + " must be positive");
  }
}

void collect_operands(const MonoidExpr& m, std::vector<MonoidExpr>& out) {
  if (const auto* u = m.as<Union>()) {
    collect_operands(u->left, out);
    collect_operands(u->right, out);
  } else {
    out.push_back(m);
  }
}

std::string print_atom(const MonoidExpr& m);

std::string print_expr(const MonoidExpr& m) {
  if (const auto* u = m.as<Union>()) {
    return print_expr(u->left) + " union " + print_expr(u->right);
  }
  if (const auto* s = m.as<Scale>()) {
    return s->factor.str() + " * " + print_atom(s->inner);
  }
  return print_atom(m);
}

std::string print_atom(const MonoidExpr& m) {
  struct Printer {
    std::string operator()(const FiniteGen& f) const {
      std::string out = "<";
      for (std::size_t i = 0; i < f.gens.size(); ++i) {
        if (i > 0) out += ", ";
        out += f.gens[i].str();
      }
      return out + ">";
    }
    std::string operator()(const CyclicSemiring& c) const { return "S(" + c.base.str() + ")"; }
    std::string operator()(const PrimeReciprocal&) const { return "PR"; }
    std::string operator()(const DenseTail& t) const { return "T(" + t.start.str() + ")"; }
    std::string operator()(const PrimeFracIncreasing&) const { return "PF"; }
    std::string operator()(const IncreasingDenom&) const { return "ID"; }
    std::string operator()(const FiniteAtomExample& f) const {
      return "FA(" + std::to_string(f.m) + ", " + std::to_string(f.p) + ", " +
             std::to_string(f.q) + ")";
    }
    std::string operator()(const Scale&) const { return {}; }
    std::string operator()(const Union&) const { return {}; }
  };
  if (m.is<Scale>() || m.is<Union>()) return "(" + print_expr(m) + ")";
  return std::visit(Printer{}, m.node().value);
}

}  // namespace

std::string_view tri_name(Tri t) noexcept {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

MonoidExpr::MonoidExpr() : MonoidExpr(finite_gen({Rat(1)})) {}

bool operator==(const MonoidExpr& a, const MonoidExpr& b) {
  return a.node_ == b.node_ || a.node_->value == b.node_->value;
}

MonoidExpr finite_gen(std::vector<Rat> gens) {
  if (gens.empty()) throw Error(ErrorCode::Validation, "a generator list must be nonempty");
  for (const auto& g : gens) require_positive(g, "generators");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return wrap(FiniteGen{std::move(gens)});
}

MonoidExpr cyclic_semiring(const Rat& base) {
  require_positive(base, "the base of S(r)");
  return wrap(CyclicSemiring{base});
}

MonoidExpr prime_reciprocal() { return wrap(PrimeReciprocal{}); }

MonoidExpr dense_tail(const Rat& start) {
  require_positive(start, "the start of T(r)");
  return wrap(DenseTail{start});
}

MonoidExpr prime_frac_increasing() { return wrap(PrimeFracIncreasing{}); }

MonoidExpr increasing_denom() { return wrap(IncreasingDenom{}); }

MonoidExpr finite_atom_example(std::uint64_t m, std::uint64_t p, std::uint64_t q) {
  if (m < 1) throw Error(ErrorCode::Validation, "FA requires m >= 1");
  if (!exact::is_prime(p) || !exact::is_prime(q)) {
    throw Error(ErrorCode::Validation, "FA requires p and q prime");
  }
  if (p == q) throw Error(ErrorCode::Validation, "FA requires p != q");
  if (q <= m) throw Error(ErrorCode::Validation, "FA requires q > m");
  return wrap(FiniteAtomExample{m, p, q});
}

MonoidExpr scale(const Rat& factor, const MonoidExpr& inner) {
  require_positive(factor, "scale factors");
  if (factor == Rat(1)) return inner;
  if (const auto* s = inner.as<Scale>()) return scale(factor * s->factor, s->inner);
  if (const auto* t = inner.as<DenseTail>()) return dense_tail(factor * t->start);
  return wrap(Scale{factor, inner});
}

MonoidExpr union_of(const MonoidExpr& left, const MonoidExpr& right) {
  std::vector<MonoidExpr> raw;
  collect_operands(left, raw);
  collect_operands(right, raw);

  std::optional<Rat> tail;
  std::vector<MonoidExpr> rest;
  for (const auto& op : raw) {
    if (const auto* t = op.as<DenseTail>()) {
      tail = tail ? std::min(*tail, t->start) : t->start;
    } else if (std::find(rest.begin(), rest.end(), op) == rest.end()) {
      rest.push_back(op);
    }
  }

  std::optional<MonoidExpr> chain;
  for (auto it = rest.rbegin(); it != rest.rend(); ++it) {
    chain = chain ? wrap(Union{*it, *chain}) : *it;
  }
  if (!tail) return *chain;
  MonoidExpr t = dense_tail(*tail);
  if (!chain) return t;
  return wrap(Union{*chain, t});
}

std::string print(const MonoidExpr& m) { return print_expr(m); }

Orientation orient(std::span<const SignedRat> values) {
  if (values.empty()) throw Error(ErrorCode::Validation, "orient needs at least one value");
  bool any_negative = false;
  bool any_positive = false;
  Orientation out;
  for (const auto& v : values) {
    if (v.magnitude.is_zero()) throw Error(ErrorCode::Validation, "orient values must be nonzero");
    (v.negative ? any_negative : any_positive) = true;
    out.gens.push_back(v.magnitude);
  }
  if (any_negative && any_positive) {
    throw Error(ErrorCode::MixedSignsGeneratesGroup,
                "values of both signs generate a subgroup of Q, not a Puiseux monoid");
  }
  out.sign = any_negative ? -1 : 1;
  return out;
}

std::pair<Rat, MonoidExpr> strip_scale(const MonoidExpr& m) {
  if (const auto* s = m.as<Scale>()) return {s->factor, s->inner};
  if (const auto* t = m.as<DenseTail>()) return {t->start, dense_tail(Rat(1))};
  return {Rat(1), m};
}

std::optional<std::vector<Rat>> finite_generators(const MonoidExpr& m) {
  if (const auto* f = m.as<FiniteGen>()) return f->gens;
  if (const auto* c = m.as<CyclicSemiring>()) {
    if (c->base.is_integer()) return std::vector<Rat>{Rat(1)};
    return std::nullopt;
  }
  if (const auto* s = m.as<Scale>()) {
    auto inner = finite_generators(s->inner);
    if (!inner) return std::nullopt;
    for (auto& g : *inner) g = g * s->factor;
    return inner;
  }
  if (const auto* u = m.as<Union>()) {
    auto left = finite_generators(u->left);
    auto right = finite_generators(u->right);
    if (!left || !right) return std::nullopt;
    left->insert(left->end(), right->begin(), right->end());
    std::sort(left->begin(), left->end());
    left->erase(std::unique(left->begin(), left->end()), left->end());
    return left;
  }
  return std::nullopt;
}

std::vector<MonoidExpr> union_operands(const MonoidExpr& m) {
  std::vector<MonoidExpr> out;
  collect_operands(m, out);
  return out;
}

}  // namespace puiseux::model
