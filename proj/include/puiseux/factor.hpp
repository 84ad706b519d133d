#pragma once

// Atoms, bounded membership and factorization search for the infinite
// families, and the canonical decomposition in <1/p | p prime>.

#include "puiseux/kernels.hpp"
#include "puiseux/model.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace puiseux::factor {

using exact::BigInt;
using exact::Rat;
using model::MonoidExpr;
using model::Tri;

struct FiniteList {
  std::vector<Rat> atoms;  // ascending, distinct
  friend bool operator==(const FiniteList&, const FiniteList&) = default;
};
/// { factor * base^n | n >= 0 }
struct PowersOf {
  Rat factor;
  Rat base;
  friend bool operator==(const PowersOf&, const PowersOf&) = default;
};
/// [lo, hi) intersected with Q
struct IntervalRats {
  Rat lo;
  Rat hi;
  friend bool operator==(const IntervalRats&, const IntervalRats&) = default;
};
/// { factor / p | p prime }
struct ReciprocalPrimes {
  Rat factor;
  friend bool operator==(const ReciprocalPrimes&, const ReciprocalPrimes&) = default;
};
/// { factor * (p-1)/p | p prime }
struct PrimeFracs {
  Rat factor;
  friend bool operator==(const PrimeFracs&, const PrimeFracs&) = default;
};
/// factor times the generators of the increasing-denominator family.
struct IncreasingDenomAtoms {
  Rat factor;
  friend bool operator==(const IncreasingDenomAtoms&, const IncreasingDenomAtoms&) = default;
};
struct EmptySet {
  friend bool operator==(const EmptySet&, const EmptySet&) = default;
};
/// No description is available (general unions).
struct UnknownAtoms {
  std::string reason;
  friend bool operator==(const UnknownAtoms&, const UnknownAtoms&) = default;
};

using AtomsDesc = std::variant<FiniteList, PowersOf, IntervalRats, ReciprocalPrimes, PrimeFracs,
                               IncreasingDenomAtoms, EmptySet, UnknownAtoms>;

AtomsDesc atoms(const MonoidExpr& m);

/// c * A, elementwise.
AtomsDesc scale_atoms(const AtomsDesc& a, const Rat& c);

/// Short human-readable description, e.g. "{2/3^n | n >= 0}".
std::string describe(const AtomsDesc& a);

struct AtomCount {
  bool known = false;
  bool infinite = false;
  std::size_t count = 0;
};
AtomCount atom_count(const AtomsDesc& a);

/// True when m is c * (PR union T(1)) for some c; returns c.
std::optional<Rat> pr_tail_union_factor(const MonoidExpr& m);

Tri is_atom(const MonoidExpr& m, const Rat& x);

/// One summand of a membership witness. For FA the summands are generators,
/// since that monoid is not atomic; elsewhere they are atoms.
struct Term {
  Rat element;
  std::uint64_t count = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

struct Membership {
  Tri holds = Tri::Unknown;
  std::vector<Term> witness;  // sums to x when holds == Yes
  std::string reason;
};

/// Tri-state membership. `no` is returned only on exact obstructions; depth
/// bounds the atom window for S_r with r < 1 and the union recursion.
Membership member_bounded(const MonoidExpr& m, const Rat& x, unsigned depth);

struct PrDecomp {
  BigInt integer_part;
  std::map<std::uint64_t, std::uint64_t> coeffs;  // p -> alpha_p in [1, p-1]

  Rat value() const;
  friend bool operator==(const PrDecomp&, const PrDecomp&) = default;
};

/// x = n + sum alpha_p / p with 0 <= alpha_p <= p-1; unique.
/// Throws NonSquarefreeDenominator or NotAMember.
PrDecomp pr_decompose(const Rat& x);

struct PrStats {
  BigInt n;
  BigInt s;
};
PrStats pr_stats(const Rat& x);

struct AtomWindow {
  std::vector<Rat> atoms;                       // r^0, ..., r^depth
  std::vector<kernels::CountVector> solutions;  // lexicographic
};

/// Every combination of r^0..r^depth summing to x. A truncation of Z(x) when
/// r < 1. Throws Validation for integer r.
AtomWindow zs_bounded(const Rat& r, const Rat& x, unsigned depth);

}  // namespace puiseux::factor
