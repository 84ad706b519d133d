#include "puiseux/error.hpp"
#include "puiseux/exact.hpp"

#include <algorithm>
#include <mutex>

namespace puiseux::exact {
namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Shared ascending prime table, grown on demand.
class PrimeTable {
 public:
  std::uint64_t nth(std::size_t index) {
    std::lock_guard lock(mutex_);
    while (primes_.size() < index) grow();
    return primes_[index - 1];
  }

  std::size_t index_of(std::uint64_t p) {
    std::lock_guard lock(mutex_);
    while (primes_.empty() || primes_.back() < p) grow();
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    return static_cast<std::size_t>(it - primes_.begin()) + 1;
  }

 private:
  void grow() {
    limit_ = limit_ * 2;
    primes_ = primes_upto(limit_);
  }

  std::mutex mutex_;
  std::uint64_t limit_ = 512;
  std::vector<std::uint64_t> primes_ = primes_upto(512);
};

PrimeTable& table() {
  static PrimeTable instance;
  return instance;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_upto(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

std::uint64_t nth_prime(std::size_t index) {
  if (index == 0) throw Error(ErrorCode::Validation, "prime indices start at 1");
  return table().nth(index);
}

std::size_t prime_index(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  return table().index_of(p);
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(const BigInt& n) {
  if (n < 1) throw Error(ErrorCode::Validation, "factorize expects a positive integer");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    std::uint64_t m = static_cast<std::uint64_t>(n);
    for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      if (e > 0) out.emplace_back(p, e);
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
  }
  BigInt m = n;
  for (std::uint64_t p = 2; BigInt(p) * p <= m; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
    if (m <= std::numeric_limits<std::uint64_t>::max()) {
      auto rest = factorize(m);
      out.insert(out.end(), rest.begin(), rest.end());
      return out;
    }
  }
  if (m > 1) out.emplace_back(to_u64(m), 1);
  return out;
}

bool is_squarefree(const BigInt& n) {
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return false;
  }
  return true;
}

}  // namespace puiseux::exact
