#pragma once

// Finitely generated Puiseux monoids, normalized to numerical monoids.

#include "puiseux/exact.hpp"
#include "puiseux/kernels.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace puiseux::numsg {

using exact::Rat;

struct FactorizationVector {
  std::vector<std::uint64_t> counts;

  std::uint64_t length() const;
  /// sum counts[i] * gens[i]
  std::uint64_t image(std::span<const std::uint64_t> gens) const;

  friend bool operator==(const FactorizationVector&, const FactorizationVector&) = default;
  friend auto operator<=>(const FactorizationVector&, const FactorizationVector&) = default;
};

class MembershipTable;

/// A numerical monoid N = scale * M, where M is the finitely generated Puiseux
/// monoid it was normalized from. gens are minimal, ascending, with gcd 1.
class NumericalMonoid {
 public:
  /// Validates gcd = 1 and minimality.
  NumericalMonoid(std::vector<std::uint64_t> gens, Rat scale);

  const std::vector<std::uint64_t>& gens() const noexcept { return gens_; }
  const Rat& scale() const noexcept { return scale_; }
  std::size_t embedding_dimension() const noexcept { return gens_.size(); }

  /// scale * q when that is an integer.
  std::optional<std::uint64_t> to_internal(const Rat& q) const;
  Rat to_original(std::uint64_t x) const;

  /// Thread-safe memoized membership.
  bool contains(std::uint64_t x) const;

 private:
  std::vector<std::uint64_t> gens_;
  Rat scale_;
  std::shared_ptr<MembershipTable> table_;
};

/// Clears denominators, divides by the gcd and drops non-minimal generators.
NumericalMonoid normalize(std::span<const Rat> gens);
NumericalMonoid normalize(std::span<const std::uint64_t> gens);

bool member(const NumericalMonoid& n, std::uint64_t x);

/// Largest gap; nullopt for N0.
std::optional<std::uint64_t> frobenius(const NumericalMonoid& n);

/// Entry i is the least element of N congruent to i mod m. Throws NotAMember
/// unless m is a nonzero element.
std::vector<std::uint64_t> apery(const NumericalMonoid& n, std::uint64_t m);

/// All factorizations of x, lexicographic in the counts. Uses the OpenMP kernel.
std::vector<FactorizationVector> factorizations(const NumericalMonoid& n, std::uint64_t x);

/// Distinct lengths, ascending.
std::vector<std::uint64_t> lengths(const NumericalMonoid& n, std::uint64_t x);

struct EqualLengthPair {
  std::uint64_t element = 0;
  FactorizationVector first;
  FactorizationVector second;
};

/// Two distinct factorizations of equal length built from the three smallest
/// generators a1 < a2 < a3: m*a1 + n*a3 = (m+n)*a2 with m, n minimal.
/// Throws Validation when the embedding dimension is below 3.
EqualLengthPair equal_length_pair(const NumericalMonoid& n);

namespace serial {

/// Single-threaded reference for factorizations.
std::vector<FactorizationVector> factorizations(const NumericalMonoid& n, std::uint64_t x);

}  // namespace serial

}  // namespace puiseux::numsg
