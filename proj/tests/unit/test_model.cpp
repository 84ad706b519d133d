#include "puiseux/error.hpp"
#include "puiseux/model.hpp"
#include "oracle/random_expr.hpp"

#include <doctest.h>

using namespace puiseux;
using namespace puiseux::model;
using exact::Rat;

TEST_CASE("parse examples") {
  CHECK(parse("<3, 5>") == finite_gen({Rat(3), Rat(5)}));
  CHECK(parse("S(2/3)") == cyclic_semiring(Rat::make(2, 3)));
  const auto u = parse("PR union T(1)");
  REQUIRE(u.is<Union>());
  CHECK(u.as<Union>()->left == prime_reciprocal());
  CHECK(u.as<Union>()->right == dense_tail(Rat(1)));
  CHECK(parse("N") == finite_gen({Rat(1)}));
  CHECK(parse("  < 5 ,3 , 3 >") == finite_gen({Rat(3), Rat(5)}));
  CHECK(parse("FA(2, 3, 5)") == finite_atom_example(2, 3, 5));
}

TEST_CASE("print examples") {
  CHECK(print(finite_gen({Rat::make(3, 2), Rat::make(5, 2)})) == "<3/2, 5/2>");
  CHECK(print(scale(Rat::make(1, 2), cyclic_semiring(Rat::make(3, 2)))) == "1/2 * S(3/2)");
  CHECK(print(union_of(prime_reciprocal(), dense_tail(Rat(1)))) == "PR union T(1)");
  CHECK(print(scale(Rat(2), union_of(prime_reciprocal(), cyclic_semiring(Rat(3))))) ==
        "2 * (PR union S(3))");
}

TEST_CASE("canonical constructors") {
  CHECK(scale(Rat(1), prime_reciprocal()) == prime_reciprocal());
  CHECK(scale(Rat(2), scale(Rat(3), prime_reciprocal())) == scale(Rat(6), prime_reciprocal()));
  CHECK(scale(Rat(2), dense_tail(Rat(1))) == dense_tail(Rat(2)));
  // dense tails merge and move outermost
  const auto u = union_of(dense_tail(Rat(3)), union_of(prime_reciprocal(), dense_tail(Rat(2))));
  REQUIRE(u.is<Union>());
  CHECK(u.as<Union>()->right == dense_tail(Rat(2)));
  CHECK(union_of(prime_reciprocal(), prime_reciprocal()) == prime_reciprocal());
}

TEST_CASE("parse errors carry positions") {
  try {
    parse("<3, 5");
    FAIL("expected throw");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 5);
  }
  try {
    parse("<3, -5>");
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.code() == ErrorCode::NegativeGenerator);
    CHECK(e.position() == 4);
  }
  try {
    parse("FA(3, 2, 3)");
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.code() == ErrorCode::Validation);
    CHECK(e.position() == 0);
  }
  CHECK_THROWS_AS(parse(""), SyntaxError);
  CHECK_THROWS_AS(parse("Q"), SyntaxError);
  CHECK_THROWS_AS(parse("<1/0>"), ParseError);
  CHECK_THROWS_AS(parse("<0>"), ParseError);
  CHECK_THROWS_AS(parse("S(2/3) PR"), SyntaxError);
  CHECK_THROWS_AS(parse("FA(2, 4, 5)"), ParseError);
}

TEST_CASE("orient") {
  std::vector<SignedRat> neg{{true, Rat::make(3, 2)}, {true, Rat(5)}};
  auto o = orient(neg);
  CHECK(o.sign == -1);
  CHECK(o.gens == std::vector<Rat>{Rat::make(3, 2), Rat(5)});
  std::vector<SignedRat> pos{{false, Rat(3)}, {false, Rat(5)}};
  CHECK(orient(pos).sign == 1);
  std::vector<SignedRat> mixed{{false, Rat(2)}, {true, Rat(3)}};
  try {
    orient(mixed);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MixedSignsGeneratesGroup);
  }
}

TEST_CASE("property: orient on the negated list flips the sign only") {
  std::mt19937_64 rng(0);
  for (int i = 0; i < 200; ++i) {
    std::vector<SignedRat> v;
    const bool negative = rng() % 2;
    for (int k = 0; k < 4; ++k) v.push_back({negative, oracle::random_rat(rng)});
    auto flipped = v;
    for (auto& s : flipped) s.negative = !s.negative;
    const auto a = orient(v);
    const auto b = orient(flipped);
    CHECK(a.sign == -b.sign);
    CHECK(a.gens == b.gens);
  }
}

TEST_CASE("meta examples") {
  CHECK(meta(parse("S(2/3)")).zero_limit_point);
  CHECK(meta(parse("PR")).zero_limit_point);
  const auto fg = meta(parse("<3,5>"));
  CHECK(fg.finitely_generated);
  CHECK(fg.increasing);
  CHECK_FALSE(fg.zero_limit_point);
  CHECK_FALSE(meta(parse("ID")).increasing);
  CHECK_FALSE(meta(parse("ID")).zero_limit_point);
  CHECK(meta(parse("PF")).increasing);
  CHECK_FALSE(meta(parse("PF")).strongly_increasing);
  CHECK(meta(parse("FA(2,3,5)")).zero_limit_point);
  CHECK(meta(parse("T(1)")).nonempty_conductor == Tri::Yes);
  CHECK(meta(parse("PR union T(1)")).nonempty_conductor == Tri::Yes);
  CHECK(meta(parse("S(3/2)")).nonempty_conductor == Tri::No);
  CHECK(meta(parse("S(2/3)")).nonempty_conductor == Tri::Unknown);
}

TEST_CASE("property: meta invariants and scale invariance") {
  std::mt19937_64 rng(0);
  for (int i = 0; i < 300; ++i) {
    const auto m = oracle::random_expr(rng, 4);
    const auto a = meta(m);
    if (a.finitely_generated) {
      CHECK(a.increasing);
      CHECK_FALSE(a.zero_limit_point);
    }
    if (a.strongly_increasing) CHECK(a.increasing);
    const auto b = meta(scale(oracle::random_rat(rng), m));
    CHECK(a.zero_limit_point == b.zero_limit_point);
    CHECK(a.increasing == b.increasing);
    CHECK(a.strongly_increasing == b.strongly_increasing);
    CHECK(a.finitely_generated == b.finitely_generated);
    CHECK(a.nonempty_conductor == b.nonempty_conductor);
  }
}

TEST_CASE("property: parse(print(M)) == M") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const auto m = oracle::random_expr(rng, 4);
    CAPTURE(print(m));
    CHECK(parse(print(m)) == m);
  }
}
