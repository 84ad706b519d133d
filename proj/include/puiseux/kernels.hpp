#pragma once

// Nonnegative integer solutions of  sum_i c_i * w_i = target.
//
// Two implementations of the same enumeration are kept: the OpenMP kernel
// used by the library, and a single-threaded reference that the tests and
// benchmarks compare it against. Both emit solutions in lexicographic order
// of the count vectors, so results are schedule independent.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace puiseux::kernels {

using CountVector = std::vector<std::uint64_t>;

/// Largest target accepted by the enumerators (bounds the reachability tables).
inline constexpr std::uint64_t kMaxTarget = 50'000'000;

/// reach[v] == 1 iff v is a nonnegative combination of weights, v <= limit.
std::vector<char> reachable(std::span<const std::uint64_t> weights, std::uint64_t limit);

/// Parallel over the leading coefficient c_0.
std::vector<CountVector> knapsack_solutions(std::span<const std::uint64_t> weights,
                                            std::uint64_t target);

/// One solution list per target, computed in parallel over targets.
std::vector<std::vector<CountVector>> knapsack_solutions_batch(
    std::span<const std::uint64_t> weights, std::span<const std::uint64_t> targets);

/// Some solution, when one exists (dynamic program over [0, target]).
std::optional<CountVector> find_solution(std::span<const std::uint64_t> weights,
                                         std::uint64_t target);

namespace serial {

std::vector<CountVector> knapsack_solutions(std::span<const std::uint64_t> weights,
                                            std::uint64_t target);

std::vector<std::vector<CountVector>> knapsack_solutions_batch(
    std::span<const std::uint64_t> weights, std::span<const std::uint64_t> targets);

}  // namespace serial

}  // namespace puiseux::kernels
