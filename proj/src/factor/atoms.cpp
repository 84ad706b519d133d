#include "puiseux/error.hpp"
#include "puiseux/factor.hpp"
#include "puiseux/numsg.hpp"

namespace puiseux::factor {
namespace {

using namespace model;

struct AtomsVisitor {
  AtomsDesc operator()(const FiniteGen& f) const {
    auto n = numsg::normalize(std::span<const Rat>(f.gens));
    FiniteList out;
    for (auto g : n.gens()) out.atoms.push_back(n.to_original(g));
    return out;
  }
  AtomsDesc operator()(const CyclicSemiring& c) const {
    if (c.base.is_integer()) return FiniteList{{Rat(1)}};
    if (c.base.num() == 1) return EmptySet{};
    return PowersOf{Rat(1), c.base};
  }
  AtomsDesc operator()(const PrimeReciprocal&) const { return ReciprocalPrimes{Rat(1)}; }
  AtomsDesc operator()(const DenseTail& t) const { return IntervalRats{t.start, t.start * Rat(2)}; }
  AtomsDesc operator()(const PrimeFracIncreasing&) const { return PrimeFracs{Rat(1)}; }
  AtomsDesc operator()(const IncreasingDenom&) const { return IncreasingDenomAtoms{Rat(1)}; }
  AtomsDesc operator()(const FiniteAtomExample& f) const {
    FiniteList out;
    for (std::uint64_t k = f.m; k < 2 * f.m; ++k) out.atoms.push_back(Rat(k));
    return out;
  }
  AtomsDesc operator()(const Scale& s) const { return scale_atoms(atoms(s.inner), s.factor); }
  AtomsDesc operator()(const Union&) const { return UnknownAtoms{}; }
};

// y == base^n for some n >= 0.
bool is_power(const Rat& base, const Rat& y) {
  if (base == Rat(1)) return y == Rat(1);
  Rat v(1);
  const bool up = base > Rat(1);
  while (up ? v <= y : v >= y) {
    if (v == y) return true;
    v = v * base;
  }
  return false;
}

std::optional<std::uint64_t> prime_denominator(const Rat& y) {
  if (y.den() > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  const auto p = static_cast<std::uint64_t>(y.den());
  if (!exact::is_prime(p)) return std::nullopt;
  return p;
}

}  // namespace

AtomsDesc atoms(const MonoidExpr& m) {
  if (m.is<Union>()) {
    if (auto c = pr_tail_union_factor(m)) return ReciprocalPrimes{*c};
    if (auto gens = finite_generators(m)) return AtomsVisitor{}(FiniteGen{*gens});
    return UnknownAtoms{"atoms of a union do not decompose in general"};
  }
  return std::visit(AtomsVisitor{}, m.node().value);
}

AtomsDesc scale_atoms(const AtomsDesc& a, const Rat& c) {
  struct Scaler {
    const Rat& c;
    AtomsDesc operator()(const FiniteList& f) const {
      FiniteList out;
      for (const auto& x : f.atoms) out.atoms.push_back(x * c);
      return out;
    }
    AtomsDesc operator()(const PowersOf& p) const { return PowersOf{p.factor * c, p.base}; }
    AtomsDesc operator()(const IntervalRats& i) const { return IntervalRats{i.lo * c, i.hi * c}; }
    AtomsDesc operator()(const ReciprocalPrimes& r) const { return ReciprocalPrimes{r.factor * c}; }
    AtomsDesc operator()(const PrimeFracs& r) const { return PrimeFracs{r.factor * c}; }
    AtomsDesc operator()(const IncreasingDenomAtoms& r) const { return IncreasingDenomAtoms{r.factor * c}; }
    AtomsDesc operator()(const EmptySet& e) const { return e; }
    AtomsDesc operator()(const UnknownAtoms& u) const { return u; }
  };
  return std::visit(Scaler{c}, a);
}

std::string describe(const AtomsDesc& a) {
  struct Describer {
    static std::string times(const Rat& f) { return f == Rat(1) ? "" : f.str() + " * "; }
    std::string operator()(const FiniteList& f) const {
      std::string out = "{";
      for (std::size_t i = 0; i < f.atoms.size(); ++i) {
        out += (i ? ", " : "") + f.atoms[i].str();
      }
      return out + "}";
    }
    std::string operator()(const PowersOf& p) const {
      return "{" + times(p.factor) + "(" + p.base.str() + ")^n | n >= 0}";
    }
    std::string operator()(const IntervalRats& i) const {
      return "[" + i.lo.str() + ", " + i.hi.str() + ") in Q";
    }
    std::string operator()(const ReciprocalPrimes& r) const { return "{" + times(r.factor) + "1/p | p prime}"; }
    std::string operator()(const PrimeFracs& r) const { return "{" + times(r.factor) + "(p-1)/p | p prime}"; }
    std::string operator()(const IncreasingDenomAtoms& r) const {
      return "{" + times(r.factor) +
             "(p_2n^2+1)/p_2n, (p_2n+1 + 1)/p_2n+1 | n >= 1}";
    }
    std::string operator()(const EmptySet&) const { return "{}"; }
    std::string operator()(const UnknownAtoms&) const { return "unknown"; }
  };
  return std::visit(Describer{}, a);
}

AtomCount atom_count(const AtomsDesc& a) {
  if (const auto* f = std::get_if<FiniteList>(&a)) return {true, false, f->atoms.size()};
  if (std::holds_alternative<EmptySet>(a)) return {true, false, 0};
  if (std::holds_alternative<UnknownAtoms>(a)) return {};
  return {true, true, 0};
}

std::optional<Rat> pr_tail_union_factor(const MonoidExpr& m) {
  if (const auto* s = m.as<Scale>()) {
    auto inner = pr_tail_union_factor(s->inner);
    if (inner) return *inner * s->factor;
    return std::nullopt;
  }
  const auto* u = m.as<Union>();
  if (u == nullptr) return std::nullopt;
  const auto* t = u->right.as<DenseTail>();
  if (t == nullptr) return std::nullopt;
  auto [c, core] = strip_scale(u->left);
  if (!core.is<PrimeReciprocal>() || c != t->start) return std::nullopt;
  return c;
}

Tri is_atom(const MonoidExpr& m, const Rat& x) {
  if (x.is_zero()) return Tri::No;
  struct Checker {
    const Rat& x;
    Tri operator()(const FiniteList& f) const {
      return std::find(f.atoms.begin(), f.atoms.end(), x) != f.atoms.end() ? Tri::Yes : Tri::No;
    }
    Tri operator()(const PowersOf& p) const {
      return is_power(p.base, x / p.factor) ? Tri::Yes : Tri::No;
    }
    Tri operator()(const IntervalRats& i) const {
      return i.lo <= x && x < i.hi ? Tri::Yes : Tri::No;
    }
    Tri operator()(const ReciprocalPrimes& r) const {
      const Rat y = x / r.factor;
      return y.num() == 1 && prime_denominator(y) ? Tri::Yes : Tri::No;
    }
    Tri operator()(const PrimeFracs& r) const {
      const Rat y = x / r.factor;
      auto p = prime_denominator(y);
      return p && y.num() == *p - 1 ? Tri::Yes : Tri::No;
    }
    Tri operator()(const IncreasingDenomAtoms& r) const {
      const Rat y = x / r.factor;
      auto p = prime_denominator(y);
      if (!p || *p == 2) return Tri::No;
      const std::size_t k = exact::prime_index(*p);
      const BigInt want = k % 2 == 0 ? BigInt(*p) * *p + 1 : BigInt(*p) + 1;
      return y.num() == want ? Tri::Yes : Tri::No;
    }
    Tri operator()(const EmptySet&) const { return Tri::No; }
    Tri operator()(const UnknownAtoms&) const { return Tri::Unknown; }
  };
  const AtomsDesc desc = atoms(m);
  if (std::holds_alternative<UnknownAtoms>(desc)) {
    // Non-members are never atoms; otherwise a finite search cannot decide.
    return member_bounded(m, x, 8).holds == Tri::No ? Tri::No : Tri::Unknown;
  }
  return std::visit(Checker{x}, desc);
}

}  // namespace puiseux::factor
