#include "puiseux/error.hpp"
#include "puiseux/kernels.hpp"

#include <string>

namespace puiseux::kernels {
namespace {

void check_inputs(std::span<const std::uint64_t> weights, std::uint64_t target) {
  if (weights.empty()) throw Error(ErrorCode::Validation, "knapsack needs at least one weight");
  for (auto w : weights) {
    if (w == 0) throw Error(ErrorCode::Validation, "knapsack weights must be positive");
  }
  if (target > kMaxTarget) {
    throw Error(ErrorCode::Overflow,
                "target " + std::to_string(target) + " exceeds the enumeration limit");
  }
}

void descend(std::span<const std::uint64_t> weights, std::uint64_t rest, std::size_t index,
             CountVector& current, std::vector<CountVector>& out) {
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
    current[index] = c;
    descend(weights, rest - c * w, index + 1, current, out);
  }
  current[index] = 0;
}

}  // namespace

std::vector<char> reachable(std::span<const std::uint64_t> weights, std::uint64_t limit) {
  check_inputs(weights, limit);
  std::vector<char> reach(limit + 1, 0);
  reach[0] = 1;
  for (std::uint64_t v = 1; v <= limit; ++v) {
    for (auto w : weights) {
      if (w <= v && reach[v - w]) {
        reach[v] = 1;
        break;
      }
    }
  }
  return reach;
}

std::optional<CountVector> find_solution(std::span<const std::uint64_t> weights,
                                         std::uint64_t target) {
  check_inputs(weights, target);
  // via[v] = 1 + index of the last weight used to reach v; 0 = unreachable.
  std::vector<std::uint32_t> via(target + 1, 0);
  via[0] = 1;
  for (std::uint64_t v = 1; v <= target; ++v) {
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] <= v && via[v - weights[i]] != 0) {
        via[v] = static_cast<std::uint32_t>(i + 1);
        break;
      }
    }
  }
  if (via[target] == 0) return std::nullopt;
  CountVector counts(weights.size(), 0);
  for (std::uint64_t v = target; v > 0;) {
    const std::size_t i = via[v] - 1;
    ++counts[i];
    v -= weights[i];
  }
  return counts;
}

namespace serial {

std::vector<CountVector> knapsack_solutions(std::span<const std::uint64_t> weights,
                                            std::uint64_t target) {
  check_inputs(weights, target);
  std::vector<CountVector> out;
  CountVector current(weights.size(), 0);
  descend(weights, target, 0, current, out);
  return out;
}

std::vector<std::vector<CountVector>> knapsack_solutions_batch(
    std::span<const std::uint64_t> weights, std::span<const std::uint64_t> targets) {
  std::vector<std::vector<CountVector>> out;
  out.reserve(targets.size());
  for (auto t : targets) out.push_back(knapsack_solutions(weights, t));
  return out;
}

}  // namespace serial

}  // namespace puiseux::kernels
