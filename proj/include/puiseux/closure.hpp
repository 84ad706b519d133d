#pragma once

// Root closure (equal to the complete integral closure for Puiseux monoids),
// conductors and isomorphism by rescaling.

#include "puiseux/model.hpp"
#include "puiseux/supernatural.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace puiseux::closure {

using exact::BigInt;
using exact::Rat;
using exact::Supernatural;
using model::MonoidExpr;
using model::Tri;
using model::Verdict;

/// The root closure n * <1/d | d divides s>.
struct ClosureDesc {
  BigInt n = 1;
  Supernatural s;

  bool contains(const Rat& q) const;
  /// Description of c * (this closure).
  ClosureDesc scaled(const Rat& c) const;

  friend bool operator==(const ClosureDesc&, const ClosureDesc&) = default;
};

BigInt numerator_gcd(const MonoidExpr& m);
Supernatural denominator_sn(const MonoidExpr& m);
ClosureDesc root_closure(const MonoidExpr& m);

Verdict is_root_closed(const MonoidExpr& m);

/// Whether the root closure is antimatter: exactly when m is not finitely generated.
Verdict is_antimatter_closure(const MonoidExpr& m);

struct ConductorDesc {
  enum class Kind { EqualsMonoid, Empty, Tail, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<Rat> sigma;  // Tail only: the conductor is M >= sigma
  std::string reason;
};

std::string_view kind_name(ConductorDesc::Kind k) noexcept;

/// `seed` drives the sampled absorption check used for unions with a dense tail.
ConductorDesc conductor(const MonoidExpr& m, std::uint64_t seed = 0);

struct IsoResult {
  Tri holds = Tri::Unknown;
  std::optional<Rat> multiplier;  // B = multiplier * A when holds == Yes
  std::string reason;
};

IsoResult iso_check(const MonoidExpr& a, const MonoidExpr& b);

}  // namespace puiseux::closure
