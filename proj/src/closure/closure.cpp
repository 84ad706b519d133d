#include "puiseux/closure.hpp"
#include "puiseux/error.hpp"
#include "puiseux/factor.hpp"
#include "puiseux/numsg.hpp"
#include "puiseux/sampling.hpp"

#include <set>

namespace puiseux::closure {
namespace {

using exact::SnDefault;
using namespace model;

constexpr const char* kRcCite = "R-RC: Cor. 'closure of a PM' (root-closed iff gp(M) = M u -M iff Pruefer)";

long signed_valuation(std::uint64_t p, const Rat& c) {
  return static_cast<long>(exact::valuation(p, c.num())) -
         static_cast<long>(exact::valuation(p, c.den()));
}

Supernatural prime_power_infinity(const BigInt& b) {
  Supernatural s;
  for (auto [p, e] : exact::factorize(b)) s = s.with(p, Supernatural::kInfinity);
  return s;
}

ClosureDesc family_closure(const MonoidExpr& m);

struct ClosureVisitor {
  ClosureDesc operator()(const FiniteGen& f) const {
    BigInt n = 0;
    BigInt l = 1;
    for (const auto& g : f.gens) {
      n = exact::gcd(n, g.num());
      l = exact::lcm(l, g.den());
    }
    return {n, Supernatural::from_integer(l)};
  }
  ClosureDesc operator()(const CyclicSemiring& c) const {
    // r^0 = 1 is always a generator, so the numerator gcd is 1.
    return {1, prime_power_infinity(c.base.den())};
  }
  ClosureDesc operator()(const PrimeReciprocal&) const {
    return {1, Supernatural::all_primes(SnDefault::One)};
  }
  ClosureDesc operator()(const DenseTail&) const {
    return {1, Supernatural::all_primes(SnDefault::Infinity)};
  }
  ClosureDesc operator()(const PrimeFracIncreasing&) const {
    return {1, Supernatural::all_primes(SnDefault::One)};
  }
  ClosureDesc operator()(const IncreasingDenom&) const {
    // Numerators p^2 + 1 and p + 1 are even; denominators are odd primes.
    return {2, Supernatural::all_primes(SnDefault::One).with(2, 0)};
  }
  ClosureDesc operator()(const FiniteAtomExample& f) const {
    Supernatural s;
    return {1, s.with(f.p, Supernatural::kInfinity)};
  }
  ClosureDesc operator()(const Scale& s) const { return family_closure(s.inner).scaled(s.factor); }
  ClosureDesc operator()(const Union& u) const {
    ClosureDesc a = family_closure(u.left);
    ClosureDesc b = family_closure(u.right);
    return {exact::gcd(a.n, b.n), exact::sn_lcm(a.s, b.s)};
  }
};

ClosureDesc family_closure(const MonoidExpr& m) { return std::visit(ClosureVisitor{}, m.node().value); }

bool is_numerical_n0(const std::vector<Rat>& gens) {
  return numsg::normalize(std::span<const Rat>(gens)).gens() == std::vector<std::uint64_t>{1};
}

ConductorDesc scaled_conductor(ConductorDesc c, const Rat& factor) {
  if (c.sigma) c.sigma = *c.sigma * factor;
  return c;
}

}  // namespace

bool ClosureDesc::contains(const Rat& q) const {
  if (q.is_zero()) return true;
  Rat y = q / Rat(n);
  return exact::sn_divides(y.den(), s);
}

ClosureDesc ClosureDesc::scaled(const Rat& c) const {
  std::set<std::uint64_t> primes;
  for (const auto* v : {&n, &c.num(), &c.den()}) {
    for (auto [p, e] : exact::factorize(*v)) primes.insert(p);
  }
  for (const auto& [p, e] : s.explicit_exponents()) primes.insert(p);

  ClosureDesc out{1, s};
  for (auto p : primes) {
    const auto e = s.exponent(p);
    if (e == Supernatural::kInfinity) continue;
    // The closure is {x >= 0 : v_p(x) >= beta_p for all p}.
    const long beta = static_cast<long>(exact::valuation(p, n)) - static_cast<long>(e) +
                      signed_valuation(p, c);
    if (beta > 0) out.n *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(beta));
    out.s = out.s.with(p, beta < 0 ? static_cast<Supernatural::Exponent>(-beta) : 0);
  }
  return out;
}

ClosureDesc root_closure(const MonoidExpr& m) { return family_closure(m); }
BigInt numerator_gcd(const MonoidExpr& m) { return family_closure(m).n; }
Supernatural denominator_sn(const MonoidExpr& m) { return family_closure(m).s; }

Verdict is_root_closed(const MonoidExpr& m) {
  if (const auto* s = m.as<Scale>()) return is_root_closed(s->inner);
  if (auto gens = finite_generators(m)) {
    if (is_numerical_n0(*gens)) return {Tri::Yes, std::string(kRcCite) + "; M is a rescaled N0"};
    return {Tri::No, std::string(kRcCite) + "; M is isomorphic to a numerical monoid other than N0"};
  }
  if (const auto* c = m.as<CyclicSemiring>()) {
    if (c->base.num() == 1) {
      return {Tri::Yes, std::string(kRcCite) + "; S_{1/b} is every nonnegative rational with denominator dividing b^inf"};
    }
    return {Tri::No, std::string(kRcCite) + "; 1/d(r) lies in the root closure but not in S_r"};
  }
  if (m.is<PrimeReciprocal>()) {
    return {Tri::No, std::string(kRcCite) + "; 1/6 has squarefree denominator but is not in <1/p>"};
  }
  if (m.is<DenseTail>()) {
    return {Tri::No, std::string(kRcCite) + "; the root closure is Q>=0 while M misses (0, r)"};
  }
  if (m.is<PrimeFracIncreasing>()) {
    return {Tri::No, std::string(kRcCite) + "; 1/3 is in the root closure but below every nonzero element"};
  }
  if (m.is<IncreasingDenom>()) {
    return {Tri::No, std::string(kRcCite) + "; the root closure has elements below every atom"};
  }
  if (m.is<FiniteAtomExample>()) {
    return {Tri::No, std::string(kRcCite) + "; 1/p is in the root closure but not in M"};
  }
  if (const auto* u = m.as<Union>(); u && u->right.is<DenseTail>()) {
    return {Tri::No, std::string(kRcCite) +
                         "; the root closure is Q>=0 but the other parts have restricted denominators below r"};
  }
  return {Tri::Unknown, "no root-closure result for this union"};
}

Verdict is_antimatter_closure(const MonoidExpr& m) {
  const bool fg = meta(m).finitely_generated;
  return {fg ? Tri::No : Tri::Yes,
          "Cor. 'closure of a non-finitely generated PM is antimatter': M is " +
              std::string(fg ? "" : "not ") + "finitely generated"};
}

std::string_view kind_name(ConductorDesc::Kind k) noexcept {
  switch (k) {
    case ConductorDesc::Kind::EqualsMonoid: return "equals_monoid";
    case ConductorDesc::Kind::Empty: return "empty";
    case ConductorDesc::Kind::Tail: return "tail";
    case ConductorDesc::Kind::Unknown: return "unknown";
  }
  return "unknown";
}

ConductorDesc conductor(const MonoidExpr& m, std::uint64_t seed) {
  using Kind = ConductorDesc::Kind;
  if (const auto* s = m.as<Scale>()) return scaled_conductor(conductor(s->inner, seed), s->factor);
  if (is_root_closed(m).holds == Tri::Yes) {
    return {Kind::EqualsMonoid, std::nullopt, "root-closed: c(M) = M~ = M"};
  }
  if (auto gens = finite_generators(m)) {
    auto n = numsg::normalize(std::span<const Rat>(*gens));
    auto f = numsg::frobenius(n);
    const std::uint64_t start = f ? *f + 1 : 0;
    return {Kind::Tail, n.to_original(start),
            "numerical monoid: c(N) = {n >= f(N) + 1} with f(N) = " +
                (f ? std::to_string(*f) : std::string("none"))};
  }
  if (const auto* t = m.as<DenseTail>()) {
    return {Kind::Tail, t->start, "sup of the gaps of {0} u Q>=r is r, which lies in M"};
  }
  if (const auto* c = m.as<CyclicSemiring>(); c && c->base > Rat(1)) {
    return {Kind::Empty, std::nullopt,
            "S_r with r > 1 not in N: M is discrete while M~ is dense, so M~ \\ M is unbounded"};
  }
  if (const auto* u = m.as<Union>(); u && u->right.is<DenseTail>()) {
    const Rat r = u->right.as<DenseTail>()->start;
    sampling::Rng rng(seed);
    const ClosureDesc desc = root_closure(m);
    auto ys = sampling::closure_samples(desc, rng, 50);
    auto xs = sampling::member_samples(m, rng, 50);
    for (std::size_t i = 0; i < ys.size(); ++i) {
      const Rat x = xs[i] + r;  // x + r stays in M and exceeds r
      if (factor::member_bounded(m, x + ys[i], 8).holds != Tri::Yes) {
        return {Kind::Unknown, std::nullopt, "sampled absorption check failed at " + (x + ys[i]).str()};
      }
    }
    return {Kind::Tail, r, "M~ \\ M lies below r and M contains Q>=r; 50 sampled absorptions passed"};
  }
  return {Kind::Unknown, std::nullopt, meta(m).conductor_reason};
}

IsoResult iso_check(const MonoidExpr& a, const MonoidExpr& b) {
  auto fa = finite_generators(a);
  auto fb = finite_generators(b);
  if (fa && fb) {
    auto na = numsg::normalize(std::span<const Rat>(*fa));
    auto nb = numsg::normalize(std::span<const Rat>(*fb));
    if (na.gens() == nb.gens()) {
      return {Tri::Yes, na.scale() / nb.scale(), "both normalize to the same numerical monoid"};
    }
    return {Tri::No, std::nullopt,
            "different normalized numerical monoids; isomorphisms are rational multiplications"};
  }
  if (fa.has_value() != fb.has_value()) {
    return {Tri::No, std::nullopt, "exactly one of the monoids is finitely generated"};
  }
  auto [ca, core_a] = strip_scale(a);
  auto [cb, core_b] = strip_scale(b);
  if (core_a == core_b) return {Tri::Yes, cb / ca, "same family up to rescaling"};

  if (meta(core_a).zero_limit_point != meta(core_b).zero_limit_point) {
    return {Tri::No, std::nullopt, "0 is a limit point of exactly one of them"};
  }
  const Tri ra = is_root_closed(core_a).holds;
  const Tri rb = is_root_closed(core_b).holds;
  if (ra != Tri::Unknown && rb != Tri::Unknown && ra != rb) {
    return {Tri::No, std::nullopt, "exactly one of them is root-closed"};
  }
  const auto aa = factor::atom_count(factor::atoms(core_a));
  const auto ab = factor::atom_count(factor::atoms(core_b));
  if (aa.known && ab.known && (aa.infinite != ab.infinite || aa.count != ab.count)) {
    return {Tri::No, std::nullopt, "different numbers of atoms"};
  }
  return {Tri::Unknown, std::nullopt, "no decision procedure for this pair"};
}

}  // namespace puiseux::closure
