#include "puiseux/error.hpp"
#include "puiseux/exact.hpp"

#include <cctype>

namespace puiseux {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroDenominator: return "E_ZERO_DENOMINATOR";
    case ErrorCode::NegativeValue: return "E_NEGATIVE_VALUE";
    case ErrorCode::NotPrime: return "E_NOT_PRIME";
    case ErrorCode::Syntax: return "E_SYNTAX";
    case ErrorCode::Validation: return "E_VALIDATION";
    case ErrorCode::NegativeGenerator: return "E_NEGATIVE_GENERATOR";
    case ErrorCode::MixedSignsGeneratesGroup: return "E_MIXED_SIGNS";
    case ErrorCode::TrivialMonoid: return "E_TRIVIAL_MONOID";
    case ErrorCode::NotAMember: return "E_NOT_A_MEMBER";
    case ErrorCode::NonSquarefreeDenominator: return "E_NON_SQUAREFREE";
    case ErrorCode::Unsupported: return "E_UNSUPPORTED";
    case ErrorCode::Overflow: return "E_OVERFLOW";
    case ErrorCode::Contradiction: return "E_CONTRADICTION";
  }
  return "E_UNKNOWN";
}

}  // namespace puiseux

namespace puiseux::exact {

BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  return a / gcd(a, b) * b;
}

Rat::Rat(const BigInt& value) : num_(value) {
  if (value < 0) throw Error(ErrorCode::NegativeValue, "negative value " + value.str());
}

Rat Rat::make(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "zero denominator");
  BigInt n = num;
  BigInt d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n < 0) {
    throw Error(ErrorCode::NegativeValue,
                "negative value " + num.str() + "/" + den.str());
  }
  Rat r;
  if (n.is_zero()) return r;
  BigInt g = gcd(n, d);
  r.num_ = n / g;
  r.den_ = d / g;
  return r;
}

Rat rat_make(const BigInt& num, const BigInt& den) { return Rat::make(num, den); }

Rat Rat::parse(std::string_view text) {
  auto digits = [&](std::size_t& i) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw SyntaxError(i, "digit");
    return BigInt(std::string(text.substr(start, i - start)));
  };
  std::size_t i = 0;
  if (!text.empty() && text[0] == '-') {
    throw ParseError(ErrorCode::NegativeValue, 0,
                     "negative value at 0: only nonnegative rationals are supported");
  }
  BigInt num = digits(i);
  BigInt den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    std::size_t den_pos = i;
    den = digits(i);
    if (den.is_zero()) {
      throw ParseError(ErrorCode::ZeroDenominator, den_pos,
                       "zero denominator at " + std::to_string(den_pos));
    }
  }
  if (i != text.size()) throw SyntaxError(i, "end of rational");
  return make(num, den);
}

std::string Rat::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rat Rat::reciprocal() const {
  if (is_zero()) throw Error(ErrorCode::ZeroDenominator, "reciprocal of zero");
  Rat r;
  r.num_ = den_;
  r.den_ = num_;
  return r;
}

Rat operator+(const Rat& a, const Rat& b) {
  return Rat::make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) {
  BigInt n = a.num_ * b.den_ - b.num_ * a.den_;
  if (n < 0) {
    throw Error(ErrorCode::NegativeValue,
                "negative difference " + a.str() + " - " + b.str());
  }
  return Rat::make(n, a.den_ * b.den_);
}

Rat operator*(const Rat& a, const Rat& b) {
  return Rat::make(a.num_ * b.num_, a.den_ * b.den_);
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero");
  return Rat::make(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rat& q) { return os << q.str(); }

BigInt floor(const Rat& q) { return q.num() / q.den(); }

Rat pow(const Rat& r, unsigned k) {
  return Rat::make(boost::multiprecision::pow(r.num(), k),
                   boost::multiprecision::pow(r.den(), k));
}

std::string Valuation::str() const {
  return is_infinite() ? std::string("inf") : std::to_string(*value_);
}

unsigned valuation(std::uint64_t p, const BigInt& n) {
  unsigned e = 0;
  BigInt m = n;
  while (!m.is_zero() && m % p == 0) {
    m /= p;
    ++e;
  }
  return e;
}

Valuation padic_val(std::uint64_t p, const Rat& q) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (q.is_zero()) return Valuation::infinity();
  return Valuation(static_cast<long>(valuation(p, q.num())) -
                   static_cast<long>(valuation(p, q.den())));
}

std::uint64_t to_u64(const BigInt& n) {
  if (n < 0 || n > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::Overflow, n.str() + " does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(n);
}

}  // namespace puiseux::exact
