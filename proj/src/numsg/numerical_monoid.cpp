#include "puiseux/error.hpp"
#include "puiseux/numsg.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <queue>
#include <shared_mutex>
#include <string>

namespace puiseux::numsg {
namespace {

constexpr std::uint64_t kMaxTable = 400'000'000;

// Keeps the generators not representable by smaller kept ones.
std::vector<std::uint64_t> minimal_subset(std::vector<std::uint64_t> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  const std::uint64_t top = gens.back();
  if (top > kMaxTable) throw Error(ErrorCode::Overflow, "generator too large to normalize");
  std::vector<char> reach(top + 1, 0);
  reach[0] = 1;
  std::vector<std::uint64_t> kept;
  for (auto g : gens) {
    if (reach[g]) continue;
    kept.push_back(g);
    for (std::uint64_t v = g; v <= top; ++v) {
      if (reach[v - g]) reach[v] = 1;
    }
  }
  return kept;
}

}  // namespace

std::uint64_t FactorizationVector::length() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::uint64_t FactorizationVector::image(std::span<const std::uint64_t> gens) const {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < counts.size() && i < gens.size(); ++i) total += counts[i] * gens[i];
  return total;
}

// Membership bits for [0, size), grown by doubling up to the Schur bound
// g_1 * g_k, beyond which every integer is in the monoid.
class MembershipTable {
 public:
  explicit MembershipTable(std::vector<std::uint64_t> gens) : gens_(std::move(gens)) {
    const unsigned __int128 b =
        static_cast<unsigned __int128>(gens_.front()) * gens_.back();
    bound_ = b > std::numeric_limits<std::uint64_t>::max()
                 ? std::numeric_limits<std::uint64_t>::max()
                 : static_cast<std::uint64_t>(b);
    bits_.push_back(1);
  }

  std::uint64_t bound() const noexcept { return bound_; }

  bool contains(std::uint64_t x) {
    if (x >= bound_) return true;
    {
      std::shared_lock lock(mutex_);
      if (x < bits_.size()) return bits_[x] != 0;
    }
    std::unique_lock lock(mutex_);
    grow(x);
    return bits_[x] != 0;
  }

 private:
  void grow(std::uint64_t x) {
    if (x < bits_.size()) return;
    std::uint64_t want = std::max<std::uint64_t>(x + 1, 2 * bits_.size());
    want = std::min(want, bound_);
    if (want > kMaxTable) {
      throw Error(ErrorCode::Overflow, "membership table would exceed " + std::to_string(kMaxTable));
    }
    std::uint64_t v = bits_.size();
    bits_.resize(want, 0);
    for (; v < want; ++v) {
      for (auto g : gens_) {
        if (g > v) break;
        if (bits_[v - g]) {
          bits_[v] = 1;
          break;
        }
      }
    }
  }

  std::vector<std::uint64_t> gens_;
  std::uint64_t bound_ = 0;
  std::shared_mutex mutex_;
  std::vector<char> bits_;
};

NumericalMonoid::NumericalMonoid(std::vector<std::uint64_t> gens, Rat scale)
    : gens_(std::move(gens)), scale_(std::move(scale)) {
  if (gens_.empty()) throw Error(ErrorCode::Validation, "a numerical monoid needs generators");
  if (std::find(gens_.begin(), gens_.end(), 0u) != gens_.end()) {
    throw Error(ErrorCode::Validation, "generators must be positive");
  }
  if (!std::is_sorted(gens_.begin(), gens_.end())) {
    throw Error(ErrorCode::Validation, "generators must be ascending");
  }
  std::uint64_t g = 0;
  for (auto a : gens_) g = std::gcd(g, a);
  if (g != 1) throw Error(ErrorCode::Validation, "generators must have gcd 1");
  if (minimal_subset(gens_) != gens_) {
    throw Error(ErrorCode::Validation, "generators must be minimal and distinct");
  }
  if (scale_.is_zero()) throw Error(ErrorCode::Validation, "scale must be positive");
  table_ = std::make_shared<MembershipTable>(gens_);
}

std::optional<std::uint64_t> NumericalMonoid::to_internal(const Rat& q) const {
  Rat v = q * scale_;
  if (!v.is_integer()) return std::nullopt;
  if (v.num() > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::Overflow, "value " + q.str() + " too large");
  }
  return static_cast<std::uint64_t>(v.num());
}

Rat NumericalMonoid::to_original(std::uint64_t x) const { return Rat(x) / scale_; }

bool NumericalMonoid::contains(std::uint64_t x) const { return table_->contains(x); }

NumericalMonoid normalize(std::span<const Rat> gens) {
  if (gens.empty()) throw Error(ErrorCode::Validation, "normalize needs at least one generator");
  exact::BigInt l = 1;
  for (const auto& g : gens) {
    if (g.is_zero()) throw Error(ErrorCode::Validation, "generators must be positive");
    l = exact::lcm(l, g.den());
  }
  std::vector<exact::BigInt> ints;
  exact::BigInt d = 0;
  for (const auto& g : gens) {
    ints.push_back(g.num() * (l / g.den()));
    d = exact::gcd(d, ints.back());
  }
  std::vector<std::uint64_t> small;
  for (const auto& v : ints) small.push_back(exact::to_u64(v / d));
  return NumericalMonoid(minimal_subset(std::move(small)), Rat::make(l, d));
}

NumericalMonoid normalize(std::span<const std::uint64_t> gens) {
  std::vector<Rat> rats(gens.begin(), gens.end());
  return normalize(std::span<const Rat>(rats));
}

bool member(const NumericalMonoid& n, std::uint64_t x) { return n.contains(x); }

std::optional<std::uint64_t> frobenius(const NumericalMonoid& n) {
  const auto& g = n.gens();
  const std::uint64_t bound = g.front() * g.back();
  for (std::uint64_t x = bound; x-- > 0;) {
    if (!n.contains(x)) return x;
  }
  return std::nullopt;
}

std::vector<std::uint64_t> apery(const NumericalMonoid& n, std::uint64_t m) {
  if (m == 0 || !n.contains(m)) {
    throw Error(ErrorCode::NotAMember, std::to_string(m) + " is not a nonzero element");
  }
  if (m > kMaxTable) throw Error(ErrorCode::Overflow, "Apery set too large");
  constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> dist(m, kInf);
  using Item = std::pair<std::uint64_t, std::uint64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[r]) continue;
    for (auto g : n.gens()) {
      const std::uint64_t next = (r + g) % m;
      if (d + g < dist[next]) {
        dist[next] = d + g;
        queue.emplace(d + g, next);
      }
    }
  }
  return dist;
}

std::vector<FactorizationVector> factorizations(const NumericalMonoid& n, std::uint64_t x) {
  std::vector<FactorizationVector> out;
  for (auto& c : kernels::knapsack_solutions(n.gens(), x)) out.push_back({std::move(c)});
  return out;
}

std::vector<std::uint64_t> lengths(const NumericalMonoid& n, std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (const auto& z : factorizations(n, x)) out.push_back(z.length());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EqualLengthPair equal_length_pair(const NumericalMonoid& n) {
  const auto& a = n.gens();
  if (a.size() < 3) {
    throw Error(ErrorCode::Validation, "equal_length_pair needs at least three generators");
  }
  const std::uint64_t d1 = a[1] - a[0];
  const std::uint64_t d2 = a[2] - a[1];
  const std::uint64_t g = std::gcd(d1, d2);
  const std::uint64_t m = d2 / g;
  const std::uint64_t k = d1 / g;

  EqualLengthPair out;
  out.element = m * a[0] + k * a[2];
  out.first.counts.assign(a.size(), 0);
  out.second.counts.assign(a.size(), 0);
  out.first.counts[0] = m;
  out.first.counts[2] = k;
  out.second.counts[1] = m + k;
  return out;
}

namespace serial {

std::vector<FactorizationVector> factorizations(const NumericalMonoid& n, std::uint64_t x) {
  std::vector<FactorizationVector> out;
  for (auto& c : kernels::serial::knapsack_solutions(n.gens(), x)) out.push_back({std::move(c)});
  return out;
}

}  // namespace serial

}  // namespace puiseux::numsg
