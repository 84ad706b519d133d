#include "puiseux/error.hpp"
#include "puiseux/supernatural.hpp"

#include <algorithm>
#include <cctype>

namespace puiseux::exact {

Supernatural::Exponent default_exponent(SnDefault rule) {
  switch (rule) {
    case SnDefault::Zero: return 0;
    case SnDefault::One: return 1;
    case SnDefault::Infinity: return Supernatural::kInfinity;
  }
  return 0;
}

void Supernatural::canonicalize() {
  const Exponent dflt = default_exponent(default_);
  std::erase_if(explicit_, [dflt](const auto& kv) { return kv.second == dflt; });
}

Supernatural Supernatural::from_integer(const BigInt& n) {
  if (n < 1) throw Error(ErrorCode::Validation, "supernatural from non-positive integer");
  Supernatural s;
  for (const auto& [p, e] : factorize(n)) s.explicit_[p] = e;
  return s;
}

Supernatural Supernatural::all_primes(SnDefault rule) {
  Supernatural s;
  s.default_ = rule;
  return s;
}

Supernatural Supernatural::with(std::uint64_t p, Exponent e) const {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  Supernatural s = *this;
  s.explicit_[p] = e;
  s.canonicalize();
  return s;
}

Supernatural::Exponent Supernatural::exponent(std::uint64_t p) const {
  auto it = explicit_.find(p);
  return it == explicit_.end() ? default_exponent(default_) : it->second;
}

bool Supernatural::is_integer() const {
  if (default_ != SnDefault::Zero) return false;
  return std::none_of(explicit_.begin(), explicit_.end(),
                      [](const auto& kv) { return kv.second == kInfinity; });
}

BigInt Supernatural::to_integer() const {
  if (!is_integer()) throw Error(ErrorCode::Validation, str() + " is not an integer");
  BigInt n = 1;
  for (const auto& [p, e] : explicit_) n *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e));
  return n;
}

std::string Supernatural::str() const {
  std::string out;
  for (const auto& [p, e] : explicit_) {
    if (!out.empty()) out += '*';
    out += std::to_string(p);
    if (e == kInfinity) {
      out += "^inf";
    } else if (e != 1) {
      out += '^' + std::to_string(e);
    }
  }
  if (out.empty()) out = "1";
  switch (default_) {
    case SnDefault::Zero: out += "|rest=0"; break;
    case SnDefault::One: out += "|rest=1"; break;
    case SnDefault::Infinity: out += "|rest=inf"; break;
  }
  return out;
}

Supernatural Supernatural::parse(std::string_view text) {
  Supernatural s;
  std::size_t bar = text.find('|');
  std::string_view product = text.substr(0, bar);
  if (bar != std::string_view::npos) {
    std::string_view rest = text.substr(bar + 1);
    if (rest == "rest=0") {
      s.default_ = SnDefault::Zero;
    } else if (rest == "rest=1") {
      s.default_ = SnDefault::One;
    } else if (rest == "rest=inf") {
      s.default_ = SnDefault::Infinity;
    } else {
      throw SyntaxError(bar + 1, "rest=0, rest=1 or rest=inf");
    }
  }
  auto read_uint = [&](std::size_t& i) {
    std::size_t start = i;
    while (i < product.size() && std::isdigit(static_cast<unsigned char>(product[i]))) ++i;
    if (i == start) throw SyntaxError(i, "digit");
    return std::stoull(std::string(product.substr(start, i - start)));
  };
  if (product == "1") return s;
  std::size_t i = 0;
  while (i < product.size()) {
    std::size_t at = i;
    std::uint64_t p = read_uint(i);
    if (!is_prime(p)) throw ParseError(ErrorCode::NotPrime, at, std::to_string(p) + " is not prime");
    Exponent e = 1;
    if (i < product.size() && product[i] == '^') {
      ++i;
      if (product.substr(i, 3) == "inf") {
        e = kInfinity;
        i += 3;
      } else {
        e = read_uint(i);
      }
    }
    s.explicit_[p] = e;
    if (i < product.size()) {
      if (product[i] != '*') throw SyntaxError(i, "'*'");
      ++i;
    }
  }
  s.canonicalize();
  return s;
}

Supernatural sn_lcm(const Supernatural& a, const Supernatural& b) {
  Supernatural out = Supernatural::all_primes(
      std::max(a.default_rule(), b.default_rule()));
  for (const auto* side : {&a, &b}) {
    for (const auto& [p, e] : side->explicit_exponents()) {
      out = out.with(p, std::max(a.exponent(p), b.exponent(p)));
    }
  }
  return out;
}

bool sn_divides(const BigInt& d, const Supernatural& s) {
  if (d < 1) throw Error(ErrorCode::Validation, "sn_divides expects a positive integer");
  BigInt rest = d;
  for (const auto& [p, e] : s.explicit_exponents()) {
    unsigned v = valuation(p, rest);
    if (e != Supernatural::kInfinity && v > e) return false;
    rest /= boost::multiprecision::pow(BigInt(p), v);
  }
  switch (s.default_rule()) {
    case SnDefault::Zero: return rest == 1;
    case SnDefault::Infinity: return true;
    case SnDefault::One: return is_squarefree(rest);
  }
  return false;
}

}  // namespace puiseux::exact
