#include "puiseux/error.hpp"
#include "puiseux/factor.hpp"

namespace puiseux::factor {
namespace {

using u128 = unsigned __int128;

std::uint64_t mod_u64(const BigInt& a, std::uint64_t p) {
  return static_cast<std::uint64_t>(a % p);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // Fermat; p prime and p does not divide a.
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = static_cast<std::uint64_t>(static_cast<u128>(result) * base % p);
    base = static_cast<std::uint64_t>(static_cast<u128>(base) * base % p);
  }
  return result;
}

}  // namespace

Rat PrDecomp::value() const {
  Rat total(integer_part);
  for (auto [p, a] : coeffs) total += Rat::make(a, p);
  return total;
}

PrDecomp pr_decompose(const Rat& x) {
  if (!exact::is_squarefree(x.den())) {
    throw Error(ErrorCode::NonSquarefreeDenominator,
                x.str() + " has a non-squarefree denominator, so it is not in <1/p | p prime>");
  }
  PrDecomp out;
  Rat fractional;
  for (auto [p, e] : exact::factorize(x.den())) {
    const BigInt cofactor = x.den() / p;
    const std::uint64_t alpha = static_cast<std::uint64_t>(
        static_cast<u128>(mod_u64(x.num(), p)) * inverse_mod(mod_u64(cofactor, p), p) % p);
    out.coeffs[p] = alpha;
    fractional += Rat::make(alpha, p);
  }
  if (fractional > x) {
    throw Error(ErrorCode::NotAMember,
                x.str() + " is not in <1/p | p prime>: the forced residues sum to " +
                    fractional.str());
  }
  const Rat rest = x - fractional;
  out.integer_part = rest.num();  // rest is an integer by construction
  return out;
}

PrStats pr_stats(const Rat& x) {
  const PrDecomp d = pr_decompose(x);
  BigInt s = 0;
  for (auto [p, a] : d.coeffs) s += a;
  return {d.integer_part, s};
}

}  // namespace puiseux::factor
