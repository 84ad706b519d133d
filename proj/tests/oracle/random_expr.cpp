#include "random_expr.hpp"

namespace oracle {

using namespace puiseux::model;
using puiseux::exact::Rat;

Rat random_rat(std::mt19937_64& rng, std::uint64_t max_num, std::uint64_t max_den) {
  return Rat::make(rng() % max_num + 1, rng() % max_den + 1);
}

MonoidExpr random_leaf(std::mt19937_64& rng) {
  switch (rng() % 8) {
    case 0:
    case 1: {
      std::vector<Rat> gens;
      const auto k = rng() % 3 + 1;
      for (std::uint64_t i = 0; i < k; ++i) gens.push_back(random_rat(rng));
      return finite_gen(gens);
    }
    case 2: return cyclic_semiring(random_rat(rng));
    case 3: return prime_reciprocal();
    case 4: return dense_tail(random_rat(rng));
    case 5: return prime_frac_increasing();
    case 6: return increasing_denom();
    default: {
      const std::uint64_t m = rng() % 3 + 1;
      const std::vector<std::pair<std::uint64_t, std::uint64_t>> pq{{2, 5}, {3, 5}, {2, 7}, {5, 7}, {3, 11}};
      auto [p, q] = pq[rng() % pq.size()];
      return finite_atom_example(m, p, q);
    }
  }
}

MonoidExpr random_expr(std::mt19937_64& rng, int max_depth) {
  if (max_depth <= 1) return random_leaf(rng);
  switch (rng() % 4) {
    case 0: return scale(random_rat(rng), random_expr(rng, max_depth - 1));
    case 1: return union_of(random_expr(rng, max_depth - 1), random_expr(rng, max_depth - 1));
    default: return random_leaf(rng);
  }
}

}  // namespace oracle
