#pragma once

#include "puiseux/exact.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>

namespace puiseux::exact {

/// Exponent applied to every prime not listed explicitly.
enum class SnDefault { Zero, One, Infinity };

/// A formal product prod p^{e_p} with e_p in N0 or infinity. Its divisors are
/// exactly the sets of positive integers closed under divisors and lcm that
/// arise as denominator sets of Puiseux monoids.
///
/// Canonical: no explicit exponent equals the default exponent.
class Supernatural {
 public:
  using Exponent = std::uint64_t;
  static constexpr Exponent kInfinity = std::numeric_limits<Exponent>::max();

  /// The integer 1.
  Supernatural() = default;

  static Supernatural from_integer(const BigInt& n);
  /// Every prime raised to the default exponent.
  static Supernatural all_primes(SnDefault rule);
  /// Parses the serialized form, e.g. "2^inf*3^2|rest=0".
  static Supernatural parse(std::string_view text);

  /// Copy with e_p replaced.
  Supernatural with(std::uint64_t p, Exponent e) const;

  Exponent exponent(std::uint64_t p) const;
  SnDefault default_rule() const noexcept { return default_; }
  const std::map<std::uint64_t, Exponent>& explicit_exponents() const noexcept {
    return explicit_;
  }

  /// True when this is a positive integer (default Zero, finite exponents).
  bool is_integer() const;
  /// Precondition: is_integer().
  BigInt to_integer() const;

  std::string str() const;

  friend bool operator==(const Supernatural&, const Supernatural&) = default;

 private:
  void canonicalize();

  std::map<std::uint64_t, Exponent> explicit_;
  SnDefault default_ = SnDefault::Zero;
};

Supernatural sn_lcm(const Supernatural& a, const Supernatural& b);

/// v_p(d) <= e_p(s) for every prime p | d.
bool sn_divides(const BigInt& d, const Supernatural& s);

Supernatural::Exponent default_exponent(SnDefault rule);

}  // namespace puiseux::exact
