#pragma once

// Deterministic pseudorandom samples of monoid elements and closure elements,
// used by the property checks.

#include "puiseux/closure.hpp"
#include "puiseux/model.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace puiseux::sampling {

using Rng = std::mt19937_64;
using exact::Rat;

/// Elements n*k/d with d | s, d <= 10^4, k <= 10^3.
std::vector<Rat> closure_samples(const closure::ClosureDesc& c, Rng& rng, std::size_t count);

/// A random generator of the monoid (small index within infinite families).
Rat generator_sample(const model::MonoidExpr& m, Rng& rng);

/// Random sums of up to `max_terms` generators; each sample is in m.
std::vector<Rat> member_samples(const model::MonoidExpr& m, Rng& rng, std::size_t count,
                                unsigned max_terms = 4);

}  // namespace puiseux::sampling
