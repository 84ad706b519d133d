#include "oracle.hpp"

#include <algorithm>

namespace oracle {
namespace {

void enumerate(const std::vector<std::uint64_t>& gens, std::size_t i, std::uint64_t sum,
               std::uint64_t x, Counts& c, std::vector<Counts>& out) {
  if (i == gens.size()) {
    if (sum == x) out.push_back(c);
    return;
  }
  for (std::uint64_t k = 0; sum + k * gens[i] <= x; ++k) {
    c[i] = k;
    enumerate(gens, i + 1, sum + k * gens[i], x, c, out);
  }
  c[i] = 0;
}

std::vector<std::uint64_t> primes_of(std::uint64_t d) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= d; ++p) {
    if (d % p == 0) {
      out.push_back(p);
      while (d % p == 0) d /= p;
    }
  }
  return out;
}

}  // namespace

std::vector<Counts> factorizations(const std::vector<std::uint64_t>& gens, std::uint64_t x) {
  std::vector<Counts> out;
  Counts c(gens.size(), 0);
  enumerate(gens, 0, 0, x, c, out);
  return out;
}

bool member(const std::vector<std::uint64_t>& gens, std::uint64_t x) {
  return !factorizations(gens, x).empty();
}

std::vector<std::uint64_t> apery(const std::vector<std::uint64_t>& gens, std::uint64_t m) {
  std::vector<std::uint64_t> out(m, 0);
  for (std::uint64_t i = 0; i < m; ++i) {
    std::uint64_t s = i;
    while (!member(gens, s)) s += m;
    out[i] = s;
  }
  return out;
}

std::vector<std::pair<std::uint64_t, std::map<std::uint64_t, std::uint64_t>>> pr_decompositions(
    const puiseux::exact::Rat& x, std::uint64_t d, std::uint64_t n_max) {
  using puiseux::exact::Rat;
  const auto ps = primes_of(d);
  std::vector<std::pair<std::uint64_t, std::map<std::uint64_t, std::uint64_t>>> out;
  std::vector<std::uint64_t> alpha(ps.size(), 0);
  while (true) {
    Rat frac;
    for (std::size_t i = 0; i < ps.size(); ++i) frac += Rat::make(alpha[i], ps[i]);
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      if (Rat(n) + frac == x) {
        std::map<std::uint64_t, std::uint64_t> m;
        for (std::size_t i = 0; i < ps.size(); ++i) {
          if (alpha[i] != 0) m[ps[i]] = alpha[i];
        }
        out.emplace_back(n, m);
      }
    }
    std::size_t i = 0;
    while (i < ps.size() && ++alpha[i] == ps[i]) alpha[i++] = 0;
    if (i == ps.size()) break;
  }
  return out;
}

bool has_equal_length_pair(const std::vector<std::uint64_t>& gens, std::uint64_t x) {
  auto fs = factorizations(gens, x);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      std::uint64_t li = 0, lj = 0;
      for (auto v : fs[i]) li += v;
      for (auto v : fs[j]) lj += v;
      if (li == lj) return true;
    }
  }
  return false;
}

std::vector<std::vector<std::uint64_t>> numerical_monoids(std::size_t k_min, std::size_t k_max,
                                                          std::uint64_t g_max) {
  std::vector<std::vector<std::uint64_t>> out;
  if (k_min <= 1) out.push_back({1});
  std::vector<std::uint64_t> cur;
  auto gcd_all = [](const std::vector<std::uint64_t>& v) {
    std::uint64_t g = 0;
    for (auto a : v) {
      std::uint64_t b = g;
      g = a;
      while (b) {
        auto t = g % b;
        g = b;
        b = t;
      }
    }
    return g;
  };
  auto minimal = [](const std::vector<std::uint64_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::vector<std::uint64_t> rest;
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (j != i) rest.push_back(v[j]);
      }
      if (!rest.empty() && member(rest, v[i])) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::uint64_t next) -> void {
    if (cur.size() >= std::max<std::size_t>(k_min, 2) && gcd_all(cur) == 1 && minimal(cur)) {
      out.push_back(cur);
    }
    if (cur.size() == k_max) return;
    for (std::uint64_t g = next; g <= g_max; ++g) {
      cur.push_back(g);
      self(self, g + 1);
      cur.pop_back();
    }
  };
  rec(rec, 2);
  return out;
}

}  // namespace oracle
