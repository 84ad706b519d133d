#include "puiseux/sampling.hpp"

#include "puiseux/error.hpp"

namespace puiseux::sampling {
namespace {

using namespace model;

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> primes = exact::primes_upto(50);
  return primes;
}

}  // namespace

std::vector<Rat> closure_samples(const closure::ClosureDesc& c, Rng& rng, std::size_t count) {
  std::vector<std::uint64_t> dens;
  for (std::uint64_t d = 1; d <= 10'000; ++d) {
    if (exact::sn_divides(d, c.s)) dens.push_back(d);
  }
  std::vector<Rat> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t d = dens[uniform(rng, 0, dens.size() - 1)];
    const std::uint64_t k = uniform(rng, 0, 1000);
    out.push_back(Rat(c.n) * Rat::make(k, d));
  }
  return out;
}

Rat generator_sample(const MonoidExpr& m, Rng& rng) {
  struct Sampler {
    Rng& rng;
    Rat operator()(const FiniteGen& f) const { return f.gens[uniform(rng, 0, f.gens.size() - 1)]; }
    Rat operator()(const CyclicSemiring& c) const {
      return exact::pow(c.base, static_cast<unsigned>(uniform(rng, 0, 6)));
    }
    Rat operator()(const PrimeReciprocal&) const {
      const auto& ps = small_primes();
      return Rat::make(1, ps[uniform(rng, 0, ps.size() - 1)]);
    }
    Rat operator()(const DenseTail& t) const {
      const std::uint64_t d = uniform(rng, 1, 100);
      return t.start * Rat::make(d + uniform(rng, 0, 3 * d), d);
    }
    Rat operator()(const PrimeFracIncreasing&) const {
      const auto& ps = small_primes();
      const std::uint64_t p = ps[uniform(rng, 0, ps.size() - 1)];
      return Rat::make(p - 1, p);
    }
    Rat operator()(const IncreasingDenom&) const {
      const std::size_t k = uniform(rng, 2, 15);
      const std::uint64_t p = exact::nth_prime(k);
      return k % 2 == 0 ? Rat::make(BigInt(p) * p + 1, p) : Rat::make(p + 1, p);
    }
    Rat operator()(const FiniteAtomExample& f) const {
      if (uniform(rng, 0, 1) == 0) return Rat(uniform(rng, f.m, 2 * f.m - 1));
      const auto i = static_cast<unsigned>(uniform(rng, 1, 4));
      return Rat::make(f.q, boost::multiprecision::pow(BigInt(f.p), static_cast<unsigned>(f.m) + i));
    }
    Rat operator()(const Scale& s) const { return s.factor * generator_sample(s.inner, rng); }
    Rat operator()(const Union& u) const {
      return generator_sample(uniform(rng, 0, 1) == 0 ? u.left : u.right, rng);
    }
  };
  return std::visit(Sampler{rng}, m.node().value);
}

std::vector<Rat> member_samples(const MonoidExpr& m, Rng& rng, std::size_t count,
                                unsigned max_terms) {
  std::vector<Rat> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rat x;
    const auto terms = uniform(rng, 1, max_terms);
    for (std::uint64_t t = 0; t < terms; ++t) x += generator_sample(m, rng);
    out.push_back(x);
  }
  return out;
}

}  // namespace puiseux::sampling
