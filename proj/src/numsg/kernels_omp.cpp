#include "puiseux/error.hpp"
#include "puiseux/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <iterator>
#include <string>

namespace puiseux::kernels {
namespace {

// suffix[i][v] == 1 iff v is a combination of weights[i..].
using SuffixTables = std::vector<std::vector<char>>;

SuffixTables suffix_tables(std::span<const std::uint64_t> weights, std::uint64_t target) {
  const std::size_t k = weights.size();
  if (static_cast<double>(k) * static_cast<double>(target + 1) > 4e8) {
    throw Error(ErrorCode::Overflow, "factorization search table too large");
  }
  SuffixTables suffix(k + 1);
  suffix[k].assign(target + 1, 0);
  suffix[k][0] = 1;
  for (std::size_t i = k; i-- > 1;) {
    const std::uint64_t w = weights[i];
    suffix[i] = suffix[i + 1];
    for (std::uint64_t v = w; v <= target; ++v) {
      if (suffix[i][v - w]) suffix[i][v] = 1;
    }
  }
  return suffix;
}

void descend(std::span<const std::uint64_t> weights, const SuffixTables& suffix,
             std::uint64_t rest, std::size_t index, CountVector& current,
             std::vector<CountVector>& out) {
  const std::uint64_t w = weights[index];
  if (index + 1 == weights.size()) {
    if (rest % w == 0) {
      current[index] = rest / w;
      out.push_back(current);
      current[index] = 0;
    }
    return;
  }
  for (std::uint64_t c = 0; c * w <= rest; ++c) {
    const std::uint64_t left = rest - c * w;
    if (!suffix[index + 1][left]) continue;
    current[index] = c;
    descend(weights, suffix, left, index + 1, current, out);
  }
  current[index] = 0;
}

void check_weights(std::span<const std::uint64_t> weights, std::uint64_t target) {
  if (weights.empty()) throw Error(ErrorCode::Validation, "knapsack needs at least one weight");
  if (std::find(weights.begin(), weights.end(), 0u) != weights.end()) {
    throw Error(ErrorCode::Validation, "knapsack weights must be positive");
  }
  if (target > kMaxTarget) {
    throw Error(ErrorCode::Overflow,
                "target " + std::to_string(target) + " exceeds the enumeration limit");
  }
}

}  // namespace

std::vector<CountVector> knapsack_solutions(std::span<const std::uint64_t> weights,
                                            std::uint64_t target) {
  check_weights(weights, target);
  const SuffixTables suffix = suffix_tables(weights, target);
  if (weights.size() == 1) {
    if (target % weights[0] != 0) return {};
    return {CountVector{target / weights[0]}};
  }

  const std::uint64_t w0 = weights[0];
  const std::int64_t leading = static_cast<std::int64_t>(target / w0);
  std::vector<std::vector<CountVector>> buckets(static_cast<std::size_t>(leading + 1));

#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t c = 0; c <= leading; ++c) {
    const std::uint64_t left = target - static_cast<std::uint64_t>(c) * w0;
    if (!suffix[1][left]) continue;
    CountVector current(weights.size(), 0);
    current[0] = static_cast<std::uint64_t>(c);
    descend(weights, suffix, left, 1, current, buckets[static_cast<std::size_t>(c)]);
  }

  std::vector<CountVector> out;
  for (auto& b : buckets) {
    std::move(b.begin(), b.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<std::vector<CountVector>> knapsack_solutions_batch(
    std::span<const std::uint64_t> weights, std::span<const std::uint64_t> targets) {
  if (targets.empty()) return {};
  const std::uint64_t top = *std::max_element(targets.begin(), targets.end());
  check_weights(weights, top);
  const SuffixTables suffix = suffix_tables(weights, top);

  std::vector<std::vector<CountVector>> out(targets.size());
  const auto n = static_cast<std::int64_t>(targets.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    const std::uint64_t t = targets[static_cast<std::size_t>(i)];
    if (weights.size() > 1) {
      CountVector current(weights.size(), 0);
      descend(weights, suffix, t, 0, current, out[static_cast<std::size_t>(i)]);
    } else if (t % weights[0] == 0) {
      out[static_cast<std::size_t>(i)].push_back(CountVector{t / weights[0]});
    }
  }
  return out;
}

}  // namespace puiseux::kernels
