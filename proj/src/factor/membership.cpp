#include "puiseux/closure.hpp"
#include "puiseux/error.hpp"
#include "puiseux/factor.hpp"
#include "puiseux/numsg.hpp"

#include <algorithm>

namespace puiseux::factor {
namespace {

using namespace model;
using u128 = unsigned __int128;

void add_term(std::vector<Term>& terms, const Rat& element, std::uint64_t count) {
  if (count == 0) return;
  for (auto& t : terms) {
    if (t.element == element) {
      t.count += count;
      return;
    }
  }
  terms.push_back({element, count});
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.element < b.element; });
}

Membership yes(std::vector<Term> witness, std::string reason) {
  return {Tri::Yes, std::move(witness), std::move(reason)};
}
Membership no(std::string reason) { return {Tri::No, {}, std::move(reason)}; }
Membership unknown(std::string reason) { return {Tri::Unknown, {}, std::move(reason)}; }

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = static_cast<std::uint64_t>(static_cast<u128>(result) * base % p);
    base = static_cast<std::uint64_t>(static_cast<u128>(base) * base % p);
  }
  return result;
}

// For p | d(x): the residue N * (d(x)/p)^{-1} mod p, which is the p-adic
// leading digit that any representation must reproduce.
std::uint64_t local_residue(const Rat& x, std::uint64_t p) {
  const auto n = static_cast<std::uint64_t>(x.num() % p);
  const auto e = static_cast<std::uint64_t>((x.den() / p) % p);
  return static_cast<std::uint64_t>(static_cast<u128>(n) * mod_inverse(e, p) % p);
}

// Exact search over a finite list of positive rationals.
Membership finite_search(const std::vector<Rat>& atoms, const Rat& x, bool exhaustive,
                         const std::string& scope) {
  BigInt l = x.den();
  for (const auto& a : atoms) l = exact::lcm(l, a.den());
  const BigInt target = x.num() * (l / x.den());
  if (target > kernels::kMaxTarget) return unknown("search over " + scope + " too large");
  std::vector<std::uint64_t> weights;
  std::vector<Rat> used;
  for (const auto& a : atoms) {
    const BigInt w = a.num() * (l / a.den());
    if (w <= target) {
      weights.push_back(static_cast<std::uint64_t>(w));
      used.push_back(a);
    }
  }
  if (weights.empty()) {
    return exhaustive ? no("every element of " + scope + " exceeds the target") : unknown("empty window");
  }
  auto sol = kernels::find_solution(weights, static_cast<std::uint64_t>(target));
  if (!sol) {
    return exhaustive ? no("no combination of " + scope + " reaches the target")
                      : unknown("no combination within " + scope);
  }
  std::vector<Term> witness;
  for (std::size_t i = 0; i < used.size(); ++i) add_term(witness, used[i], (*sol)[i]);
  return yes(std::move(witness), "combination of " + scope);
}

Membership member_fg(const std::vector<Rat>& gens, const Rat& x) {
  auto n = numsg::normalize(std::span<const Rat>(gens));
  auto v = n.to_internal(x);
  if (!v) return no(x.str() + " is not in the lattice of the normalized numerical monoid");
  if (!n.contains(*v)) return no(std::to_string(*v) + " is a gap of the normalized numerical monoid");
  const auto& g = n.gens();
  std::vector<std::uint64_t> counts(g.size(), 0);
  std::uint64_t rest = *v;
  const std::uint64_t bound = g.front() * g.back();
  if (rest > bound + g.back()) {
    const std::uint64_t k = (rest - bound) / g.back();
    counts.back() += k;
    rest -= k * g.back();
  }
  while (rest > 0) {
    for (std::size_t i = g.size(); i-- > 0;) {
      if (g[i] <= rest && n.contains(rest - g[i])) {
        ++counts[i];
        rest -= g[i];
        break;
      }
    }
  }
  std::vector<Term> witness;
  for (std::size_t i = 0; i < g.size(); ++i) add_term(witness, n.to_original(g[i]), counts[i]);
  return yes(std::move(witness), "exact numerical monoid membership");
}

Membership member_cyclic(const Rat& r, const Rat& x, unsigned depth) {
  if (r.is_integer()) {
    if (!x.is_integer()) return no("S_r = N0 for integer r");
    return yes({{Rat(1), exact::to_u64(x.num())}}, "S_r = N0 for integer r");
  }
  // Smallest k with d(x) | d(r)^k; d(x) | d(r)^inf holds by the closure test.
  unsigned k = 0;
  for (BigInt b = 1; b % x.den() != 0; b *= r.den()) ++k;
  if (r.num() == 1) {
    const Rat atom = exact::pow(r, k);
    return yes({{atom, exact::to_u64((x / atom).num())}},
               "S_{1/b} contains every rational with denominator dividing b^inf");
  }
  std::vector<Rat> window;
  if (r > Rat(1)) {
    for (Rat v(1); v <= x; v = v * r) window.push_back(v);
    return finite_search(window, x, true, "the powers of r not exceeding x");
  }
  const unsigned top = std::max(depth, k);
  for (unsigned j = 0; j <= top; ++j) window.push_back(exact::pow(r, j));
  return finite_search(window, x, false, "r^0..r^" + std::to_string(top));
}

Membership member_pr(const Rat& x) {
  PrDecomp d;
  try {
    d = pr_decompose(x);
  } catch (const Error& e) {
    return no(e.what());
  }
  std::vector<Term> witness;
  for (auto [p, a] : d.coeffs) add_term(witness, Rat::make(1, p), a);
  add_term(witness, Rat::make(1, 2), exact::to_u64(d.integer_part * 2));
  return yes(std::move(witness), "canonical decomposition n + sum alpha_p/p");
}

Membership member_tail(const Rat& r, const Rat& x) {
  if (x.is_zero()) return yes({}, "identity");
  if (x < r) return no(x.str() + " lies in the gap (0, " + r.str() + ")");
  const BigInt k = exact::floor(x / r);
  const Rat head = r * Rat(BigInt(k - 1));
  std::vector<Term> witness;
  add_term(witness, r, exact::to_u64(k - 1));
  add_term(witness, x - head, 1);
  return yes(std::move(witness), "x >= r splits into atoms of [r, 2r)");
}

Membership member_pf(const Rat& x) {
  if (!exact::is_squarefree(x.den())) return no("denominators in <(p-1)/p> are squarefree");
  Rat forced;
  std::vector<Term> witness;
  for (auto [p, e] : exact::factorize(x.den())) {
    // (p-1)/p = -1/p mod Z, so the coefficient is -residue mod p.
    const std::uint64_t r = (p - local_residue(x, p)) % p;
    forced += Rat(r) * Rat::make(p - 1, p);
    add_term(witness, Rat::make(p - 1, p), r);
  }
  if (forced > x) return no("the forced coefficients already exceed " + x.str());
  const Rat rest = x - forced;  // an integer; each extra pair of 1/2 adds 1
  add_term(witness, Rat::make(1, 2), exact::to_u64(rest.num() * 2));
  return yes(std::move(witness), "forced residues plus copies of 1/2");
}

Rat id_atom(std::uint64_t p) {
  const std::size_t k = exact::prime_index(p);
  if (k % 2 == 0) return Rat::make(BigInt(p) * p + 1, p);
  return Rat::make(BigInt(p) + 1, p);
}

Membership member_id(const Rat& x) {
  if (!exact::is_squarefree(x.den()) || x.den() % 2 == 0) {
    return no("denominators in this family are odd squarefree");
  }
  Rat forced;
  std::vector<Term> witness;
  for (auto [p, e] : exact::factorize(x.den())) {
    // Both atom shapes are 1/p mod Z.
    const std::uint64_t r = local_residue(x, p);
    forced += Rat(r) * id_atom(p);
    add_term(witness, id_atom(p), r);
  }
  if (forced > x) return no("the forced coefficients already exceed " + x.str());
  const Rat rest = x - forced;
  // rest must be a sum of p * atom_p. These are all even, and every one
  // besides 6, 10, 12 (p = 5, 3, 11) is an even number >= 16, so
  // {6, 10, 12} generates the whole monoid.
  if (rest.num() % 2 != 0) return no("the integer remainder " + rest.str() + " is odd");
  BigInt r = rest.num();
  std::uint64_t sixes = 0;
  if (r > 60) {
    const BigInt k = (r - 60) / 6;
    sixes = exact::to_u64(k);
    r -= k * 6;
  }
  const std::vector<std::uint64_t> weights{6, 10, 12};
  auto sol = kernels::find_solution(weights, static_cast<std::uint64_t>(r));
  if (!sol) return no("the integer remainder " + rest.str() + " is not a sum of p * atom_p");
  add_term(witness, id_atom(5), 5 * ((*sol)[0] + sixes));
  add_term(witness, id_atom(3), 3 * (*sol)[1]);
  add_term(witness, id_atom(11), 11 * (*sol)[2]);
  return yes(std::move(witness), "forced residues plus multiples p * atom_p");
}

Membership member_fa(const FiniteAtomExample& f, const Rat& x) {
  if (x.is_zero()) return yes({}, "identity");
  // M = {a + q*y : a in {0} u [m, inf) integer, y in Z[1/p] nonnegative}
  unsigned j = 0;
  for (BigInt b = 1; b % x.den() != 0; b *= f.p) ++j;
  const BigInt pj = boost::multiprecision::pow(BigInt(f.p), j);
  const auto n_mod = static_cast<std::uint64_t>(x.num() % f.q);
  const auto pj_mod = static_cast<std::uint64_t>(pj % f.q);
  const std::uint64_t rho =
      static_cast<std::uint64_t>(static_cast<u128>(n_mod) * mod_inverse(pj_mod, f.q) % f.q);
  std::uint64_t a = rho;
  if (a != 0 && a < f.m) a += f.q;
  if (Rat(a) > x) return no("no integer part a in {0} u [m, inf) with a = x mod q fits below x");

  std::vector<Term> witness;
  if (a > 0) {
    const std::uint64_t k = a / f.m;
    add_term(witness, Rat(f.m), k - 1);
    add_term(witness, Rat(f.m + a - k * f.m), 1);
  }
  const Rat y = (x - Rat(a)) / Rat(f.q);
  if (!y.is_zero()) {
    const unsigned big_j = std::max<unsigned>(j, static_cast<unsigned>(f.m) + 1);
    const BigInt scale = boost::multiprecision::pow(BigInt(f.p), big_j);
    add_term(witness, Rat::make(f.q, scale), exact::to_u64((y * Rat(scale)).num()));
  }
  return yes(std::move(witness), "integer part in {0} u [m, inf) plus q * Z[1/p]; summands are generators");
}

Membership member_impl(const MonoidExpr& m, const Rat& x, unsigned depth);

Membership member_union(const MonoidExpr& m, const Union& u, const Rat& x, unsigned depth) {
  if (const auto* t = u.right.as<DenseTail>()) {
    if (x.is_zero() || x >= t->start) return member_tail(t->start, x);
    auto inner = member_impl(u.left, x, depth);
    inner.reason = "below the dense tail only the other parts contribute: " + inner.reason;
    return inner;
  }
  for (const auto& part : union_operands(m)) {
    auto r = member_impl(part, x, depth);
    if (r.holds == Tri::Yes) return r;
  }
  return unknown("no single union operand contains x; mixed sums are not searched");
}

Membership member_impl(const MonoidExpr& m, const Rat& x, unsigned depth) {
  if (x.is_zero()) return yes({}, "identity");
  if (!closure::root_closure(m).contains(x)) return no(x.str() + " is not in the root closure");
  if (auto gens = finite_generators(m)) return member_fg(*gens, x);
  if (const auto* s = m.as<Scale>()) {
    auto r = member_impl(s->inner, x / s->factor, depth);
    for (auto& t : r.witness) t.element = t.element * s->factor;
    return r;
  }
  if (const auto* c = m.as<CyclicSemiring>()) return member_cyclic(c->base, x, depth);
  if (m.is<PrimeReciprocal>()) return member_pr(x);
  if (const auto* t = m.as<DenseTail>()) return member_tail(t->start, x);
  if (m.is<PrimeFracIncreasing>()) return member_pf(x);
  if (m.is<IncreasingDenom>()) return member_id(x);
  if (const auto* f = m.as<FiniteAtomExample>()) return member_fa(*f, x);
  if (const auto* u = m.as<Union>()) return member_union(m, *u, x, depth);
  return unknown("unsupported expression");
}

}  // namespace

Membership member_bounded(const MonoidExpr& m, const Rat& x, unsigned depth) {
  return member_impl(m, x, depth);
}

AtomWindow zs_bounded(const Rat& r, const Rat& x, unsigned depth) {
  if (r.is_integer()) throw Error(ErrorCode::Validation, "zs_bounded needs r not in N");
  AtomWindow out;
  BigInt l = x.den();
  for (unsigned j = 0; j <= depth; ++j) {
    out.atoms.push_back(exact::pow(r, j));
    l = exact::lcm(l, out.atoms.back().den());
  }
  std::vector<std::uint64_t> weights;
  for (const auto& a : out.atoms) weights.push_back(exact::to_u64(a.num() * (l / a.den())));
  const BigInt target = x.num() * (l / x.den());
  if (target > kernels::kMaxTarget) {
    throw Error(ErrorCode::Overflow, "atom window search for " + x.str() + " is too large");
  }
  out.solutions = kernels::knapsack_solutions(weights, static_cast<std::uint64_t>(target));
  return out;
}

}  // namespace puiseux::factor
