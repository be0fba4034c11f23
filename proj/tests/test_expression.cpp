#include <cmath>
#include <random>

#include <doctest.h>

#include "efsolve/expression.hpp"

using efsolve::Expression;

TEST_CASE("literal arithmetic and the worked examples") {
  CHECK(Expression::parse("(1+r^2)^(-2)").eval(1.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(Expression::parse("exp(-r^2)").eval(0.0) == 1.0);
  CHECK(Expression::parse("2+3*4").eval(0.0) == 14.0);
  CHECK(Expression::parse("(2+3)*4").eval(0.0) == 20.0);
  CHECK(Expression::parse("1e-3 + 0.5").eval(0.0) == doctest::Approx(0.5010).epsilon(1e-15));
  CHECK(Expression::parse("sqrt(r)").eval(4.0) == 2.0);
  CHECK(Expression::parse("log(exp(r))").eval(2.5) == doctest::Approx(2.5).epsilon(1e-15));
}

TEST_CASE("power is right-associative and binds tighter than unary minus") {
  CHECK(Expression::parse("-r^2").eval(3.0) == -9.0);
  CHECK(Expression::parse("(-r)^2").eval(3.0) == 9.0);
  CHECK(Expression::parse("2^-3").eval(0.0) == 0.125);
  CHECK(Expression::parse("2^3^2").eval(0.0) == 512.0);  // 2^(3^2)
  CHECK(Expression::parse("2^(3^2)").eval(0.0) == 512.0);
}

TEST_CASE("syntax errors carry byte offsets") {
  CHECK_THROWS_AS(Expression::parse(""), efsolve::parse_error);
  try {
    Expression::parse("r+");
    FAIL("expected parse_error");
  } catch (const efsolve::parse_error& e) {
    CHECK(e.position() == 2);
  }
  try {
    Expression::parse("(1+r");
    FAIL("expected parse_error");
  } catch (const efsolve::parse_error& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(Expression::parse("pi*r"), efsolve::parse_error);
  CHECK_THROWS_AS(Expression::parse("sin(r)"), efsolve::parse_error);
  CHECK_THROWS_AS(Expression::parse("1 + * 2"), efsolve::parse_error);
  CHECK_THROWS_AS(Expression::parse("r r"), efsolve::parse_error);
}

TEST_CASE("domain errors are deferred to evaluation") {
  Expression logneg = Expression::parse("log(r-1)");
  CHECK_THROWS_AS(logneg.eval(0.5), efsolve::evaluation_error);
  CHECK(logneg.eval(1.0 + std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(Expression::parse("sqrt(-1-r)").eval(0.0), efsolve::evaluation_error);
  CHECK_THROWS_AS(Expression::parse("1/r").eval(0.0), efsolve::evaluation_error);
  CHECK_THROWS_AS(Expression::parse("(r-2)^0.5").eval(1.0), efsolve::evaluation_error);
  CHECK_THROWS_AS(Expression::parse("exp(r)").eval(1e6), efsolve::evaluation_error);
}

TEST_CASE("pretty-print round-trip evaluates identically") {
  const char* sources[] = {
      "(1+r^2)^(-2)",
      "exp(-r^2)",
      "3*(1+r^2)^(-3) + r^2*(1+r^2)^(-3.5)",
      "-r^2 + 2^-3 - sqrt(r+1)/(r+2)",
      "log(1+r)*exp(-r/10)",
  };
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> dist(0.0, 100.0);
  for (const char* src : sources) {
    Expression original = Expression::parse(src);
    Expression reparsed = Expression::parse(original.pretty_print());
    for (int i = 0; i < 100; ++i) {
      const double r = dist(rng);
      CHECK(original.eval(r) == reparsed.eval(r));  // exact, same tree shape
    }
  }
}

TEST_CASE("evaluation is pure: repeated evals are bit-identical") {
  Expression e = Expression::parse("exp(-r)*sqrt(1+r^2)/(3+r)");
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(0.0, 50.0);
  for (int i = 0; i < 200; ++i) {
    const double r = dist(rng);
    CHECK(e.eval(r) == e.eval(r));
  }
}
