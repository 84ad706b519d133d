#include "puiseux/classify.hpp"
#include "puiseux/error.hpp"
#include "puiseux/factor.hpp"
#include "oracle/oracle.hpp"
#include "oracle/random_expr.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace puiseux;
using classify::kAllProperties;
using classify::kRuleIds;
using classify::Property;
using classify::PropertyVerdict;
using classify::verdict;
using exact::Rat;
using model::parse;
using model::Tri;
using P = Property;

namespace {

Tri holds(const std::vector<PropertyVerdict>& v, P p) { return verdict(v, p).holds; }

std::vector<model::MonoidExpr> corpus() {
  std::vector<model::MonoidExpr> out;
  for (const char* text :
       {"N", "<3, 5>", "<3/2, 5/2>", "<4/3, 2>", "<2, 3>", "<5, 6, 9>", "S(2/3)", "S(3/2)", "S(1/2)",
        "S(5/2)", "S(1/6)", "S(4)", "S(5/12)", "PR", "T(1)", "T(5/3)", "PF", "ID", "FA(2,3,5)",
        "FA(1,2,3)", "PR union T(1)", "3/4 * S(2/3)", "<1/2> union S(2/3)", "2 * PF",
        "PR union S(2/3)", "<3,5> union <7/2>", "S(2/3) union T(4)", "7 * (PR union T(1))"}) {
    out.push_back(parse(text));
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) out.push_back(oracle::random_expr(rng, 4));
  return out;
}

struct Edge {
  P from;
  P to;
};

constexpr Edge kEdges[] = {
    {P::UFM, P::FFM},  {P::FFM, P::BFM},  {P::BFM, P::ACCP}, {P::ACCP, P::Atomic},
    {P::UFM, P::HFM},  {P::HFM, P::BFM},  {P::UFM, P::OHFM}, {P::OHFM, P::Atomic},
    {P::FinitelyGenerated, P::FFM},
};

}  // namespace

TEST_CASE("classify S(2/3)") {
  const auto v = classify::classify(parse("S(2/3)"));
  CHECK(holds(v, P::Atomic) == Tri::Yes);
  CHECK(verdict(v, P::Atomic).rule() == "R-SR");
  CHECK(holds(v, P::ACCP) == Tri::No);
  CHECK(verdict(v, P::ACCP).rule() == "R-SR");
  CHECK(holds(v, P::BFM) == Tri::No);
  CHECK(verdict(v, P::BFM).rule() == "R-CHAIN");
  CHECK(holds(v, P::FFM) == Tri::No);
  CHECK(holds(v, P::HFM) == Tri::No);
  CHECK(holds(v, P::UFM) == Tri::No);
  CHECK(holds(v, P::Antimatter) == Tri::No);
}

TEST_CASE("classify PR") {
  const auto v = classify::classify(parse("PR"));
  CHECK(holds(v, P::ACCP) == Tri::Yes);
  CHECK(verdict(v, P::ACCP).rule() == "R-PR");
  CHECK(holds(v, P::BFM) == Tri::No);
  CHECK(verdict(v, P::BFM).rule() == "R-PR");
  CHECK(holds(v, P::Atomic) == Tri::Yes);
  CHECK(holds(v, P::FFM) == Tri::No);
  CHECK(holds(v, P::UFM) == Tri::No);
}

TEST_CASE("classify T(1)") {
  const auto v = classify::classify(parse("T(1)"));
  CHECK(holds(v, P::BFM) == Tri::Yes);
  CHECK(verdict(v, P::BFM).rule() == "R-COND");
  CHECK(holds(v, P::FFM) == Tri::No);
  CHECK(verdict(v, P::FFM).rule() == "R-DT");
  CHECK(holds(v, P::ACCP) == Tri::Yes);
  CHECK(verdict(v, P::ACCP).rule() == "R-CHAIN");
}

TEST_CASE("classify other families") {
  auto v = classify::classify(parse("<3,5>"));
  CHECK(holds(v, P::FinitelyGenerated) == Tri::Yes);
  CHECK(holds(v, P::OHFM) == Tri::Yes);
  CHECK(holds(v, P::HFM) == Tri::No);
  v = classify::classify(parse("<3,5,7>"));
  CHECK(holds(v, P::OHFM) == Tri::No);
  v = classify::classify(parse("N"));
  CHECK(holds(v, P::UFM) == Tri::Yes);
  CHECK(holds(v, P::RootClosed) == Tri::Yes);
  CHECK(holds(v, P::Pruefer) == Tri::Yes);
  v = classify::classify(parse("S(1/2)"));
  CHECK(holds(v, P::Antimatter) == Tri::Yes);
  CHECK(holds(v, P::Atomic) == Tri::No);
  CHECK(holds(v, P::ACCP) == Tri::No);
  v = classify::classify(parse("ID"));
  CHECK(holds(v, P::FFM) == Tri::Yes);
  CHECK(holds(v, P::Increasing) == Tri::No);
  CHECK(verdict(v, P::Increasing).rule() == "R-EQ10");
  v = classify::classify(parse("PR union T(1)"));
  CHECK(holds(v, P::Atomic) == Tri::Yes);
  CHECK(holds(v, P::ACCP) == Tri::No);
  CHECK(verdict(v, P::ACCP).rule() == "R-COND");
  v = classify::classify(parse("FA(2,3,5)"));
  CHECK(holds(v, P::Atomic) == Tri::No);
  CHECK(holds(v, P::BFM) == Tri::No);
  v = classify::classify(parse("PF"));
  CHECK(holds(v, P::FFM) == Tri::Yes);
  CHECK(holds(v, P::HFM) == Tri::No);
  CHECK(holds(v, P::OHFM) == Tri::No);
}

TEST_CASE("property names round trip and keep alphabetical order") {
  for (auto p : kAllProperties) CHECK(classify::property_from_name(classify::property_name(p)) == p);
  CHECK_FALSE(classify::property_from_name("Nope").has_value());
  for (std::size_t i = 1; i < kAllProperties.size(); ++i) {
    CHECK(classify::property_name(kAllProperties[i - 1]) < classify::property_name(kAllProperties[i]));
  }
}

TEST_CASE("witness chain") {
  const auto rows = classify::witness_chain();
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].monoid == parse("S(2/3)"));
  CHECK(rows[1].monoid == parse("PR"));
  CHECK(rows[1].holds == P::ACCP);
  CHECK(rows[1].fails == P::BFM);
  CHECK(rows[2].monoid == parse("T(1)"));
  CHECK(rows[3].monoid == parse("PF"));
  CHECK(rows[3].fails == P::HFM);
  for (const auto& r : rows) CHECK(r.verified());
}

TEST_CASE("hfm_counterexample examples") {
  auto n = numsg::normalize(std::vector<std::uint64_t>{3, 5});
  auto h = classify::hfm_counterexample(n);
  CHECK(h.element == 15);
  CHECK(h.first.counts == std::vector<std::uint64_t>{5, 0});
  CHECK(h.second.counts == std::vector<std::uint64_t>{0, 3});
  h = classify::hfm_counterexample(numsg::normalize(std::vector<std::uint64_t>{2, 3}));
  CHECK(h.element == 6);
  CHECK(h.first.length() == 3);
  CHECK(h.second.length() == 2);
  h = classify::hfm_counterexample(numsg::normalize(std::vector<std::uint64_t>{4, 7}));
  CHECK(h.element == 28);
  CHECK_THROWS_AS(classify::hfm_counterexample(numsg::normalize(std::vector<std::uint64_t>{1})), Error);
}

TEST_CASE("property: chain soundness on the corpus") {
  for (const auto& m : corpus()) {
    CAPTURE(model::print(m));
    const auto v = classify::classify(m);
    for (auto [from, to] : kEdges) {
      CHECK_FALSE((holds(v, from) == Tri::Yes && holds(v, to) == Tri::No));
    }
    CHECK_FALSE((holds(v, P::Antimatter) == Tri::Yes && holds(v, P::Atomic) == Tri::Yes));
    CHECK(holds(v, P::RootClosed) == holds(v, P::Pruefer));
  }
}

TEST_CASE("property: certificate totality and hypotheses") {
  for (const auto& m : corpus()) {
    CAPTURE(model::print(m));
    const auto core = model::strip_scale(m).second;
    const auto meta = model::meta(core);
    const auto count = factor::atom_count(factor::atoms(core));
    for (const auto& v : classify::classify(m)) {
      if (v.holds == Tri::Unknown) {
        CHECK(v.certificate.empty());
        continue;
      }
      REQUIRE_FALSE(v.certificate.empty());
      const auto rule = v.rule();
      CHECK(std::find(kRuleIds.begin(), kRuleIds.end(), rule) != kRuleIds.end());
      if (rule == "R-BF") CHECK_FALSE(meta.zero_limit_point);
      if (rule == "R-COND") CHECK(meta.nonempty_conductor == Tri::Yes);
      if (rule == "R-SR") CHECK(core.is<model::CyclicSemiring>());
      if (rule == "R-PR") CHECK(core.is<model::PrimeReciprocal>());
      if (rule == "R-DT") CHECK(core.is<model::DenseTail>());
      if (rule == "R-EQ10") CHECK(core.is<model::IncreasingDenom>());
      if (rule == "R-UNION-PR-T") CHECK(factor::pr_tail_union_factor(core).has_value());
      if (rule == "R-HF" || rule == "R-OHF" || rule == "R-AM") CHECK(count.known);
      if (rule == "R-INC" && v.holds == Tri::Yes) CHECK(meta.increasing);
      if (rule == "R-FG" && v.holds == Tri::Yes) CHECK(meta.finitely_generated);
    }
  }
}

TEST_CASE("property: classify is scale invariant") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const auto m = oracle::random_expr(rng, 3);
    const Rat c = oracle::random_rat(rng);
    CAPTURE(model::print(m));
    CHECK(classify::classify(model::scale(c, m)) == classify::classify(m));
  }
}

TEST_CASE("property: OHFM ground truth on small numerical monoids") {
  for (const auto& g : oracle::numerical_monoids(3, 3, 14)) {
    const auto v = classify::classify(model::finite_gen({Rat(g[0]), Rat(g[1]), Rat(g[2])}));
    CHECK(holds(v, P::OHFM) == Tri::No);
  }
  for (std::uint64_t a = 2; a <= 8; ++a) {
    for (std::uint64_t b = a + 1; b <= 9; ++b) {
      if (std::gcd(a, b) != 1) continue;
      CHECK(holds(classify::classify(model::finite_gen({Rat(a), Rat(b)})), P::OHFM) == Tri::Yes);
      for (std::uint64_t x = 0; x <= 4 * a * b; ++x) CHECK_FALSE(oracle::has_equal_length_pair({a, b}, x));
    }
  }
}

TEST_CASE("property: hfm counterexample lengths differ") {
  for (const auto& g : oracle::numerical_monoids(2, 3, 12)) {
    const auto n = numsg::normalize(std::span<const std::uint64_t>(g));
    const auto h = classify::hfm_counterexample(n);
    CHECK(h.first.image(n.gens()) == h.element);
    CHECK(h.second.image(n.gens()) == h.element);
    CHECK(h.first.length() != h.second.length());
  }
}
