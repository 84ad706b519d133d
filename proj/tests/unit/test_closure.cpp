#include "puiseux/closure.hpp"
#include "puiseux/error.hpp"
#include "puiseux/factor.hpp"
#include "puiseux/numsg.hpp"
#include "puiseux/sampling.hpp"
#include "oracle/random_expr.hpp"

#include <doctest.h>

using namespace puiseux;
using namespace puiseux::closure;
using exact::Rat;
using exact::SnDefault;
using model::parse;

namespace {

const char* const kCorpus[] = {
    "<3, 5>", "<3/2, 5/2>", "<4/3, 2>", "N",       "S(2/3)",     "S(3/2)", "S(1/2)", "S(5/2)",
    "S(1/6)", "PR",         "T(1)",     "T(5/3)",  "PF",         "ID",     "FA(2,3,5)",
    "FA(3,2,5)", "PR union T(1)", "3/4 * S(2/3)", "<1/2> union S(2/3)", "2 * PF",
};

}  // namespace

TEST_CASE("numerator_gcd and denominator_sn examples") {
  CHECK(numerator_gcd(parse("S(2/3)")) == 1);
  CHECK(numerator_gcd(parse("T(1)")) == 1);
  CHECK(numerator_gcd(parse("<4/3, 2>")) == 2);
  CHECK(denominator_sn(parse("T(7/2)")) == Supernatural::all_primes(SnDefault::Infinity));
  CHECK(denominator_sn(parse("S(2/3)")) == Supernatural().with(3, Supernatural::kInfinity));
  CHECK(denominator_sn(parse("S(5/12)")) ==
        Supernatural().with(2, Supernatural::kInfinity).with(3, Supernatural::kInfinity));
  CHECK(denominator_sn(parse("PR")) == Supernatural::all_primes(SnDefault::One));
  CHECK(denominator_sn(parse("<4/3, 2>")) == Supernatural::from_integer(3));
}

TEST_CASE("root_closure examples") {
  CHECK(root_closure(parse("T(1)")) == ClosureDesc{1, Supernatural::all_primes(SnDefault::Infinity)});
  CHECK(root_closure(parse("<3,5>")) == ClosureDesc{1, Supernatural::from_integer(1)});
  CHECK(root_closure(parse("PR")) == ClosureDesc{1, Supernatural::all_primes(SnDefault::One)});
  const auto pr = root_closure(parse("PR"));
  CHECK(pr.contains(Rat::make(1, 6)));
  CHECK_FALSE(pr.contains(Rat::make(1, 4)));
  const auto fg = root_closure(parse("<4/3, 2>"));
  CHECK(fg.contains(Rat::make(2, 3)));
  CHECK_FALSE(fg.contains(Rat::make(1, 3)));
  CHECK_FALSE(fg.contains(Rat(1)));
}

TEST_CASE("is_root_closed examples") {
  CHECK(is_root_closed(parse("S(1/2)")).holds == Tri::Yes);
  CHECK(is_root_closed(parse("T(1)")).holds == Tri::No);
  CHECK(is_root_closed(parse("N")).holds == Tri::Yes);
  CHECK(is_root_closed(parse("<3,5>")).holds == Tri::No);
  CHECK(is_root_closed(parse("PR")).holds == Tri::No);
  CHECK(is_root_closed(parse("3 * S(1/2)")).holds == Tri::Yes);
  for (const char* text : kCorpus) {
    const auto v = is_root_closed(parse(text));
    if (v.holds != Tri::Unknown) CHECK(v.certificate.rfind("R-RC", 0) == 0);
  }
}

TEST_CASE("is_antimatter_closure examples") {
  CHECK(is_antimatter_closure(parse("PR")).holds == Tri::Yes);
  CHECK(is_antimatter_closure(parse("<3,5>")).holds == Tri::No);
  CHECK(is_antimatter_closure(parse("T(1)")).holds == Tri::Yes);
}

TEST_CASE("conductor examples") {
  auto c = conductor(parse("<3,5>"));
  CHECK(c.kind == ConductorDesc::Kind::Tail);
  CHECK(c.sigma == Rat(8));
  c = conductor(parse("<3/2, 5/2>"));
  CHECK(c.kind == ConductorDesc::Kind::Tail);
  CHECK(c.sigma == Rat(4));
  c = conductor(parse("T(1)"));
  CHECK(c.kind == ConductorDesc::Kind::Tail);
  CHECK(c.sigma == Rat(1));
  CHECK(conductor(parse("S(3/2)")).kind == ConductorDesc::Kind::Empty);
  CHECK(conductor(parse("S(1/2)")).kind == ConductorDesc::Kind::EqualsMonoid);
  CHECK(conductor(parse("S(2/3)")).kind == ConductorDesc::Kind::Unknown);
  CHECK(conductor(parse("N")).kind == ConductorDesc::Kind::EqualsMonoid);
  c = conductor(parse("PR union T(1)"));
  CHECK(c.kind == ConductorDesc::Kind::Tail);
  CHECK(c.sigma == Rat(1));
  CHECK(kind_name(ConductorDesc::Kind::EqualsMonoid) == "equals_monoid");
}

TEST_CASE("iso_check examples") {
  auto r = iso_check(parse("<3/2, 5/2>"), parse("<3,5>"));
  CHECK(r.holds == Tri::Yes);
  CHECK(r.multiplier == Rat(2));
  CHECK(iso_check(parse("<2,3>"), parse("<3,5>")).holds == Tri::No);
  r = iso_check(parse("S(2/3)"), parse("7 * S(2/3)"));
  CHECK(r.holds == Tri::Yes);
  CHECK(r.multiplier == Rat(7));
}

TEST_CASE("property: closure contains 200 sampled members of each family") {
  sampling::Rng rng(0);
  for (const char* text : kCorpus) {
    CAPTURE(text);
    const auto m = parse(text);
    const auto c = root_closure(m);
    for (const auto& x : sampling::member_samples(m, rng, 200)) {
      if (!c.contains(x)) {
        CAPTURE(x.str());
        CHECK(c.contains(x));
      }
    }
  }
}

TEST_CASE("property: closure samples lie in the closure") {
  sampling::Rng rng(1);
  for (const char* text : kCorpus) {
    const auto c = root_closure(parse(text));
    for (const auto& y : sampling::closure_samples(c, rng, 50)) CHECK(c.contains(y));
  }
}

TEST_CASE("property: description idempotence on expressible cases") {
  // <n/d : d | s> re-encoded as a family has the same denominator description.
  for (std::uint64_t b = 2; b <= 12; ++b) {
    const auto m = parse("S(1/" + std::to_string(b) + ")");
    const auto s = denominator_sn(m);
    CHECK(root_closure(m) == ClosureDesc{1, s});
  }
  for (const char* text : {"<3/2, 5/2>", "<4/3, 2>", "<5/6, 7/10>"}) {
    const auto c = root_closure(parse(text));
    REQUIRE(c.s.is_integer());
    const auto d = c.s.to_integer();
    const Rat g(c.n);
    const auto again = parse("<" + (g / Rat(d)).str() + ">");
    CHECK(denominator_sn(again) == c.s);
  }
}

TEST_CASE("property: scaling transports the closure") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto m = oracle::random_expr(rng, 3);
    const auto c = oracle::random_rat(rng);
    CAPTURE(model::print(m));
    CAPTURE(c.str());
    CHECK(root_closure(model::scale(c, m)) == root_closure(m).scaled(c));
    CHECK(is_root_closed(model::scale(c, m)).holds == is_root_closed(m).holds);
  }
}

TEST_CASE("property: conductor absorbs") {
  sampling::Rng rng(0);
  for (const char* text : kCorpus) {
    const auto m = parse(text);
    const auto c = conductor(m);
    if (c.kind != ConductorDesc::Kind::Tail) continue;
    CAPTURE(text);
    const auto closure = root_closure(m);
    const auto ys = sampling::closure_samples(closure, rng, 50);
    const auto xs = sampling::member_samples(m, rng, 50);
    for (std::size_t i = 0; i < 50; ++i) {
      const Rat x = *c.sigma + xs[i];  // sigma + M lies in M_{>= sigma}
      REQUIRE(factor::member_bounded(m, x, 8).holds == Tri::Yes);
      CHECK(factor::member_bounded(m, x + ys[i], 8).holds == Tri::Yes);
    }
  }
}

TEST_CASE("property: conductor maximality on finitely generated monoids") {
  for (std::uint64_t a = 2; a <= 9; ++a) {
    for (std::uint64_t b = a + 1; b <= 13; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (std::uint64_t den : {1, 2, 3}) {
        const auto m = model::finite_gen({Rat::make(a, den), Rat::make(b, den)});
        const auto c = conductor(m);
        REQUIRE(c.kind == ConductorDesc::Kind::Tail);
        const Rat predecessor = *c.sigma - Rat::make(1, den);
        // y = 0 lies in the closure and predecessor + 0 is the Frobenius gap
        CHECK(factor::member_bounded(m, predecessor, 8).holds == Tri::No);
        CHECK(predecessor == Rat::make(a * b - a - b, den));
      }
    }
  }
}

TEST_CASE("property: iso_check symmetry") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto a = oracle::random_expr(rng, 2);
    const auto b = rng() % 2 ? model::scale(oracle::random_rat(rng), a) : oracle::random_expr(rng, 2);
    const auto ab = iso_check(a, b);
    const auto ba = iso_check(b, a);
    CAPTURE(model::print(a));
    CAPTURE(model::print(b));
    CHECK(ab.holds == ba.holds);
    if (ab.holds == Tri::Yes) CHECK(*ab.multiplier * *ba.multiplier == Rat(1));
  }
}
