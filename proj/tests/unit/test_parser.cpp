#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include <losemilat/error.hpp>
#include <losemilat/parser.hpp>

#include "oracles.hpp"

using namespace losemilat;

TEST_CASE("parse_term") {
  CHECK(parse_term("x1x2x3") == Term{1, 2, 3});
  CHECK(parse_term("x2 * x2 * x1") == Term{1, 2});
  CHECK(parse_term("x10x2") == Term{2, 10});
  CHECK(render(parse_term("x10x2")) == "x2*x10");
  CHECK(parse_term("  x1 x2 ") == Term{1, 2});
  CHECK(parse_term("x12") == Term{12});
}

TEST_CASE("parse_term errors carry a position") {
  CHECK_THROWS_AS(parse_term(""), ParseError);
  CHECK_THROWS_AS(parse_term("   "), ParseError);
  CHECK_THROWS_AS(parse_term("x"), ParseError);
  CHECK_THROWS_AS(parse_term("x0"), ParseError);
  CHECK_THROWS_AS(parse_term("x01"), ParseError);
  CHECK_THROWS_AS(parse_term("y1"), ParseError);
  CHECK_THROWS_AS(parse_term("x1*"), ParseError);
  CHECK_THROWS_AS(parse_term("*x1"), ParseError);
  CHECK_THROWS_AS(parse_term("x 1"), ParseError);
  CHECK_THROWS_AS(parse_term("x99999999999"), ParseError);
  try {
    parse_term("x1*x0");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("parse_constraint") {
  CHECK(parse_constraint("x1x2 = x1x3") == Equation(Term{1, 2}, Term{1, 3}));
  CHECK(parse_constraint("x1 <= x2") == Equation(Term{1, 2}, Term{1}));
  CHECK(parse_constraint("x1 = x1") == Equation(Term{1}, Term{1}));
  CHECK(parse_constraint("x2*x3=x1") == Equation(Term{2, 3}, Term{1}));
  CHECK(parse_constraint("x3<=x1x2") == Equation(Term{1, 2, 3}, Term{3}));
}

TEST_CASE("parse_constraint errors") {
  CHECK_THROWS_AS(parse_constraint("x1 x2"), ParseError);
  CHECK_THROWS_AS(parse_constraint("x1 <= x2 <= x3"), ParseError);
  CHECK_THROWS_AS(parse_constraint("x1 = x2 = x3"), ParseError);
  CHECK_THROWS_AS(parse_constraint("= x2"), ParseError);
  CHECK_THROWS_AS(parse_constraint("x1 ="), ParseError);
  CHECK_THROWS_AS(parse_constraint("x1 == x2"), ParseError);
  CHECK_THROWS_AS(parse_constraint("x1 < x2"), ParseError);
  CHECK_THROWS_AS(parse_constraint("x1 >= x2"), ParseError);
  CHECK_THROWS_AS(parse_constraint(""), ParseError);
}

TEST_CASE("render") {
  CHECK(render(Term{3, 1}) == "x1*x3");
  CHECK(render(Equation(Term{1, 2}, Term{1, 3})) == "x1*x2 = x1*x3");
  CHECK(render(parse_constraint("x2x1=x3")) == "x1*x2 = x3");
}

TEST_CASE("render then parse is the identity for every equation over n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const auto terms = oracle::subsets_nonempty(n);
    for (const auto& a : terms) {
      const Term t(a);
      CHECK(parse_term(render(t)) == t);
      for (const auto& b : terms) {
        const Equation eq(t, Term(b));
        CHECK(parse_constraint(render(eq)) == eq);
      }
    }
  }
}

// Random strings over the grammar's alphabet: anything accepted must survive a
// render/parse round trip unchanged.
TEST_CASE("accepted strings are reproducible by render") {
  std::mt19937 rng(20261016);
  const std::vector<std::string> tokens = {"x", "x1", "x2", "x3", "x10", "0", "1", "7", "*", "=", "<=", "<", " ", "\t"};
  std::uniform_int_distribution<std::size_t> pick(0, tokens.size() - 1);
  std::uniform_int_distribution<int> length(1, 8);
  int accepted = 0;
  for (int trial = 0; trial < 100000; ++trial) {
    std::string s;
    for (int i = length(rng); i > 0; --i) s += tokens[pick(rng)];
    try {
      const auto eq = parse_constraint(s);
      ++accepted;
      CHECK(parse_constraint(render(eq)) == eq);
    } catch (const ParseError&) {
    }
    try {
      const auto t = parse_term(s);
      CHECK(parse_term(render(t)) == t);
    } catch (const ParseError&) {
    }
  }
  CHECK(accepted > 0);
}
