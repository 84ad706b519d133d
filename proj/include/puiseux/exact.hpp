#pragma once

// Exact arithmetic substrate: arbitrary-precision integers, reduced
// nonnegative rationals, p-adic valuations and small prime utilities.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace puiseux::exact {

using BigInt = boost::multiprecision::cpp_int;

/// Nonnegative rational kept in lowest terms; num() and den() are n(q), d(q).
class Rat {
 public:
  Rat() = default;
  Rat(std::uint64_t value) : num_(value) {}  // NOLINT: integers embed
  explicit Rat(const BigInt& value);

  /// Normalizes num/den. Throws ZeroDenominator or NegativeValue.
  static Rat make(const BigInt& num, const BigInt& den);

  /// Reads "n" or "n/d" (ASCII digits only). Throws ParseError.
  static Rat parse(std::string_view text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }

  std::string str() const;

  Rat reciprocal() const;

  friend Rat operator+(const Rat& a, const Rat& b);
  /// Throws NegativeValue when b > a.
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  /// Throws ZeroDenominator when b = 0.
  friend Rat operator/(const Rat& a, const Rat& b);

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

 private:
  BigInt num_{0};
  BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rat& q);

Rat rat_make(const BigInt& num, const BigInt& den);

/// Floor of a nonnegative rational.
BigInt floor(const Rat& q);

/// r^k for k >= 0.
Rat pow(const Rat& r, unsigned k);

/// v_p(q); Infinity only for q = 0.
class Valuation {
 public:
  static Valuation infinity() { return Valuation{}; }
  explicit Valuation(long value) : value_(value) {}

  bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Precondition: !is_infinite().
  long value() const { return *value_; }
  std::string str() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  Valuation() = default;
  std::optional<long> value_;
};

/// Largest e with p^e | n, for n != 0.
unsigned valuation(std::uint64_t p, const BigInt& n);

/// Throws NotPrime when p is not prime.
Valuation padic_val(std::uint64_t p, const Rat& q);

bool is_prime(std::uint64_t n);

/// All primes <= bound, ascending. Empty when bound < 2.
std::vector<std::uint64_t> primes_upto(std::uint64_t bound);

/// nth_prime(1) = 2, nth_prime(2) = 3, ...
std::uint64_t nth_prime(std::size_t index);

/// Inverse of nth_prime. Precondition: p prime.
std::size_t prime_index(std::uint64_t p);

/// Prime factorization by trial division, ascending primes. n >= 1.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(const BigInt& n);

bool is_squarefree(const BigInt& n);

/// Narrowing conversion; throws Overflow when the value does not fit.
std::uint64_t to_u64(const BigInt& n);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace puiseux::exact
