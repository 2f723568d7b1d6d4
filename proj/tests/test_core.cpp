#include <random>

#include "doctest.h"
#include "lokal/errors.hpp"
#include "lokal/expression.hpp"
#include "lokal/polynomial.hpp"
#include "test_support.hpp"

using namespace lokal;
using lokal::testing::P;
using lokal::testing::random_polynomial;

TEST_CASE("order_compare on the documented pairs") {
  CHECK(order_compare(Exponent{0, 0}, Exponent{0, 0}) == std::strong_ordering::equal);
  CHECK(order_compare(Exponent{0, 1}, Exponent{1, 0}) == std::strong_ordering::less);
  CHECK(order_compare(Exponent{2, 0}, Exponent{0, 3}) == std::strong_ordering::less);
  CHECK_THROWS_AS(order_compare(Exponent{1}, Exponent{1, 0}), DimensionMismatch);
}

TEST_CASE("order_compare is a monomial order (exhaustive, degree <= 6, up to 3 variables)") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto all = exponents_below(n, 7);
    // exponents_below lists in increasing order, so the order is strict along the list
    for (std::size_t i = 1; i < all.size(); ++i) REQUIRE(order_compare(all[i - 1], all[i]) < 0);
    const auto small = exponents_below(n, 4);
    for (const auto& a : small)
      for (const auto& b : small) {
        const auto ab = order_compare(a, b);
        REQUIRE(ab == (0 <=> order_compare(b, a)));  // antisymmetry
        REQUIRE((ab == 0) == (a == b));
        for (const auto& c : small) {
          if (ab < 0) REQUIRE(order_compare(a + c, b + c) < 0);
          if (ab < 0 && order_compare(b, c) < 0) REQUIRE(order_compare(a, c) < 0);
        }
      }
  }
}

TEST_CASE("initial exponent and coefficient") {
  auto f = P("x + y");
  CHECK(f.initial_exponent() == Exponent{0, 1});
  CHECK(f.initial_coefficient() == 1);
  auto c = P("5");
  CHECK(c.initial_exponent() == Exponent{0, 0});
  CHECK(c.initial_coefficient() == 5);
  auto g = P("x^2 - y^3");
  CHECK(g.initial_exponent() == Exponent{2, 0});
  CHECK(g.initial_coefficient() == 1);
  CHECK_THROWS_AS(Polynomial(2).initial_exponent(), MathError);
}

TEST_CASE("nu and Init are multiplicative") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 3;
    auto f = random_polynomial(rng, n, 5, 4);
    auto g = random_polynomial(rng, n, 5, 4);
    if (f.is_zero() || g.is_zero()) continue;
    auto fg = f * g;
    REQUIRE(fg.initial_exponent() == f.initial_exponent() + g.initial_exponent());
    REQUIRE(fg.initial_coefficient() == f.initial_coefficient() * g.initial_coefficient());
  }
}

TEST_CASE("truncation commutes with products") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 3;
    auto f = random_polynomial(rng, n, 6, 6);
    auto g = random_polynomial(rng, n, 6, 6);
    TruncationLevel T(1 + trial % 8);
    REQUIRE(truncate(f * g, T) == truncate(truncate(f, T) * truncate(g, T), T));
    REQUIRE(multiply(f, g, T.degree_bound) == truncate(f * g, T));
  }
  CHECK_THROWS_AS(TruncationLevel(0), InputError);
}

TEST_CASE("substitute_linear examples") {
  // x0 -> 2 x1 (one source variable, two targets)
  LinearSubstitution L1(1, 2, {{0, 2}});
  CHECK(substitute_linear(P("x", 1), L1) == P("2*y"));
  LinearSubstitution L2(1, 3, {{0, 1, 1}});
  CHECK(substitute_linear(P("x^2", 1), L2) == P("y^2 + 2*y*z + z^2", 3));
  CHECK(substitute_linear(P("x - y"), LinearSubstitution::identity(2)) == P("x - y"));
  CHECK_THROWS_AS(substitute_linear(P("x", 1), LinearSubstitution::identity(2)), DimensionMismatch);
}

TEST_CASE("substitute_linear is a ring homomorphism") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t s = 1 + trial % 3, t = 1 + (trial / 3) % 3;
    RationalMatrix m(s, std::vector<Rational>(t));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    LinearSubstitution L(s, t, m);
    auto f = random_polynomial(rng, s, 4, 4);
    auto g = random_polynomial(rng, s, 4, 4);
    REQUIRE(substitute_linear(f + g, L) == substitute_linear(f, L) + substitute_linear(g, L));
    REQUIRE(substitute_linear(f * g, L) == substitute_linear(f, L) * substitute_linear(g, L));
  }
}

TEST_CASE("parse examples") {
  auto f = P("x^2 - 3/2*y^3");
  CHECK(f.size() == 2);
  CHECK(f.coefficient(Exponent{2, 0}) == 1);
  CHECK(f.coefficient(Exponent{0, 3}) == Rational(-3, 2));
  CHECK(P("0").is_zero());
  CHECK(P("(x+y)^2") == P("x^2 + 2*x*y + y^2"));
  CHECK(P(" 6/4 * x ") == P("3/2*x"));
}

TEST_CASE("parse errors carry positions") {
  const auto vars = default_names(2);
  try {
    parse("2x", vars);
    FAIL("implicit multiplication accepted");
  } catch (const ParseError& e) {
    CHECK(e.position() == 1);
  }
  CHECK_THROWS_AS(parse("x + w", vars), ParseError);
  CHECK_THROWS_AS(parse("-x", vars), ParseError);
  CHECK_THROWS_AS(parse("x/2", vars), ParseError);
  CHECK_THROWS_AS(parse("1/0", vars), ParseError);
  CHECK_THROWS_AS(parse("(x+y", vars), ParseError);
  CHECK_THROWS_AS(parse("x^", vars), ParseError);
  CHECK_THROWS_AS(parse("", vars), ParseError);
}

TEST_CASE("format is canonical and parse inverts it") {
  CHECK(format(P("y^3*x + x^2")) == "x^2 + x*y^3");
  CHECK(format(P("0 - 3/2*y")) == "0 - 3/2*y");
  CHECK(format(P("7 - x")) == "7 - x");
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 4;
    auto f = random_polynomial(rng, n, 5, 5);
    const auto text = format(f);
    REQUIRE(parse(text, default_names(n)) == f);
    REQUIRE(format(parse(text, default_names(n))) == text);
  }
}
