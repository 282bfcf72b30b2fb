#include <random>

#include <doctest.h>

#include "helpers.hpp"
#include "lcslab/error.hpp"
#include "lcslab/symexpr/poly.hpp"

using helpers::ex;
using helpers::str;
using lcs::Expr;

namespace {

constexpr std::size_t kZ = 2;

bool evaluates(const Expr& e, const std::vector<mpq_class>& p, mpq_class& out) {
  try {
    out = e.eval_at(p);
    return true;
  } catch (const lcs::PoleError&) {
    return false;
  }
}

}  // namespace

TEST_CASE("diff examples") {
  CHECK(ex("-1/z").diff(kZ) == ex("1/z^2"));
  CHECK(ex("-1/z^2").diff(kZ) == ex("2/z^3"));
  CHECK(ex("x*y").diff(0) == ex("y"));
  CHECK(ex("(x^2 + 1)/(x - z)").diff(0) == ex("(x^2 - 2*x*z - 1)/(x - z)^2"));
}

TEST_CASE("is_zero examples") {
  CHECK(Expr().is_zero());
  CHECK_FALSE(ex("(z^4 - 1)/z^2").is_zero());
  CHECK((ex("z") * ex("1/z") - Expr(1)).is_zero());
}

TEST_CASE("eval_at examples") {
  const std::vector<mpq_class> z3{0, 0, 3};
  CHECK(ex("-1/z").eval_at(z3) == mpq_class(-1, 3));
  const std::vector<mpq_class> z2{0, 0, 2};
  CHECK(ex("(z^4 - 1)/z^2").eval_at(z2) == mpq_class(15, 4));
  const std::vector<mpq_class> z0{1, 1, 0};
  CHECK_THROWS_AS(ex("1/z").eval_at(z0), lcs::PoleError);
}

TEST_CASE("canonical form") {
  CHECK(ex("(x^2 - 1)/(x - 1)") == ex("x + 1"));
  CHECK(ex("2/4") == Expr(mpq_class(1, 2)));
  CHECK(ex("(2*x + 2)/(4*y)") == ex("(x + 1)/(2*y)"));
  const Expr neg = ex("1/(-z)");
  CHECK(neg.denominator().leading_sign() > 0);
  CHECK(neg == ex("-1/z"));
  CHECK(ex("0/(x + y)").denominator().is_one());
  CHECK_THROWS_AS(ex("x/(y - y)"), lcs::ParseError);
  CHECK_THROWS_AS(ex("x") / (ex("y") - ex("y")), lcs::DivisionByZero);
}

TEST_CASE("parser grammar") {
  CHECK(ex("-x^2") == -(ex("x") * ex("x")));
  CHECK(ex("z^-2") == ex("1/z^2"));
  CHECK(ex("z^(-2)") == ex("1/(z*z)"));
  CHECK(ex("2*-x") == ex("-2*x"));
  CHECK(ex("--x") == ex("x"));
  CHECK(ex("x - y - z") == ex("x - (y + z)"));
  CHECK(ex("x/y/z") == ex("x/(y*z)"));
  CHECK(ex("(x + y)^0") == Expr(1));
  CHECK(lcs::parse_rational("-6/4") == mpq_class(-3, 2));
}

TEST_CASE("parse errors carry the offset") {
  try {
    ex("z*/2");
    FAIL("expected a parse error");
  } catch (const lcs::ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(ex("x +"), lcs::ParseError);
  CHECK_THROWS_AS(ex("(x"), lcs::ParseError);
  CHECK_THROWS_AS(ex("w"), lcs::ParseError);
  CHECK_THROWS_AS(ex("x^y"), lcs::ParseError);
  CHECK_THROWS_AS(ex("1.5"), lcs::ParseError);
  CHECK_THROWS_AS(lcs::parse_rational("x"), lcs::Error);
}

TEST_CASE("printer output is stable") {
  CHECK(str(ex("-(z^2 + 1/z^2)")) == "-(z^4 + 1)/z^2");
  CHECK(str(ex("-1/z")) == "-1/z");
  CHECK(str(ex("x*z^2 - 3")) == "x*z^2 - 3");
  CHECK(str(ex("(z^4 - 3)/(-z^2)")) == "-(z^4 - 3)/z^2");
  CHECK(str(ex("2/(3*z)")) == "2/(3*z)");
  CHECK(str(Expr()) == "0");
}

TEST_CASE("gcd") {
  const lcs::Poly a = ex("(x + y)*(x - z)^2").numerator();
  const lcs::Poly b = ex("(x + y)*(x^2 + z)").numerator();
  CHECK(lcs::gcd(a, b) == ex("x + y").numerator());
  CHECK(lcs::gcd(lcs::Poly(), lcs::Poly()).is_zero());
  CHECK(lcs::gcd(ex("6*x").numerator(), ex("4*x^2").numerator()) == ex("2*x").numerator());
}

TEST_CASE("property: ring laws at random rational points") {
  std::mt19937 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Expr a = helpers::random_rational(rng);
    const Expr b = helpers::random_rational(rng);
    const auto p = helpers::random_point(rng);
    mpq_class va, vb, v;
    if (!evaluates(a, p, va) || !evaluates(b, p, vb)) continue;
    REQUIRE(evaluates(a + b, p, v));
    CHECK(v == va + vb);
    REQUIRE(evaluates(a - b, p, v));
    CHECK(v == va - vb);
    REQUIRE(evaluates(a * b, p, v));
    CHECK(v == va * vb);
    if (vb != 0 && !b.is_zero()) {
      REQUIRE(evaluates(a / b, p, v));
      CHECK(v == va / vb);
    }
    ++checked;
  }
  CHECK(checked > 200);
}

TEST_CASE("property: Leibniz rule") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Expr a = helpers::random_poly(rng);
    const Expr b = helpers::random_poly(rng);
    for (std::size_t v = 0; v < 3; ++v) CHECK((a * b).diff(v) == a * b.diff(v) + b * a.diff(v));
  }
  for (int trial = 0; trial < 50; ++trial) {
    const Expr a = helpers::random_rational(rng);
    const Expr b = helpers::random_rational(rng);
    CHECK((a * b).diff(kZ) == a * b.diff(kZ) + b * a.diff(kZ));
  }
}

TEST_CASE("property: parse(print(e)) == e") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const Expr e = helpers::random_rational(rng);
    CHECK(ex(str(e)) == e);
  }
}

TEST_CASE("property: canonicalization is idempotent") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const Expr e = helpers::random_rational(rng);
    const Expr again = Expr::fraction(e.numerator(), e.denominator());
    CHECK(again == e);
    CHECK(again.numerator() == e.numerator());
    CHECK(again.denominator() == e.denominator());
    CHECK(lcs::gcd(e.numerator(), e.denominator()).is_constant());
  }
}

TEST_CASE("property: gcd divides both arguments") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 400; ++trial) {
    const lcs::Poly c = helpers::random_poly(rng, 2).numerator();
    const lcs::Poly a = (helpers::random_poly(rng, 4) * Expr::fraction(c, lcs::Poly(1))).numerator();
    const lcs::Poly b = (helpers::random_poly(rng, 4) * Expr::fraction(c, lcs::Poly(1))).numerator();
    const lcs::Poly g = lcs::gcd(a, b);
    if (a.is_zero() && b.is_zero()) continue;
    REQUIRE_FALSE(g.is_zero());
    const auto qa = a.divide_exact(g);
    const auto qb = b.divide_exact(g);
    REQUIRE(qa.has_value());
    REQUIRE(qb.has_value());
    if (!c.is_zero()) CHECK(g.divide_exact(c).has_value());
    // cofactors share no nonconstant factor
    CHECK(lcs::gcd(*qa, *qb).is_constant());
  }
}
