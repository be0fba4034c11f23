#include <cmath>

#include <doctest.h>

#include "efsolve/quadrature.hpp"

using namespace efsolve;

TEST_CASE("adaptive simpson nails smooth closed forms") {
  CHECK(adaptive_simpson([](double x) { return x * x; }, 0.0, 3.0, 1e-12) ==
        doctest::Approx(9.0).epsilon(1e-13));
  CHECK(adaptive_simpson([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-12) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(adaptive_simpson([](double x) { return std::exp(-x); }, 0.0, 40.0, 1e-13) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("doubling tail integral classifies the three reference decays") {
  TailOptions opt;  // defaults: tol 1e-5, cap 2^20

  SUBCASE("r*(1+r)^-3 converges to 1/2") {
    const auto t = integrate_to_infinity(
        [](double r) { return r * std::pow(1.0 + r, -3.0); }, opt);
    CHECK(t.verdict == TailIntegral::Verdict::kConvergent);
    CHECK(std::abs(t.value - 0.5) < 1e-6);
  }
  SUBCASE("r*exp(-r) converges to 1") {
    const auto t =
        integrate_to_infinity([](double r) { return r * std::exp(-r); }, opt);
    CHECK(t.verdict == TailIntegral::Verdict::kConvergent);
    CHECK(std::abs(t.value - 1.0) < 1e-6);
  }
  SUBCASE("r*(1+r)^-2 diverges logarithmically") {
    const auto t = integrate_to_infinity(
        [](double r) { return r * std::pow(1.0 + r, -2.0); }, opt);
    CHECK(t.verdict == TailIntegral::Verdict::kDivergent);
  }
  SUBCASE("a large but convergent integrand is not misread as divergent") {
    // 100*r*exp(-r): partials grow by ~70 over early doublings; divergence
    // must not be declared from that transient.
    const auto t = integrate_to_infinity(
        [](double r) { return 100.0 * r * std::exp(-r); }, opt);
    CHECK(t.verdict == TailIntegral::Verdict::kConvergent);
    CHECK(std::abs(t.value - 100.0) < 1e-4);
  }
}

TEST_CASE("cumulative integral agrees with direct quadrature at random order") {
  CumulativeIntegral F([](double x) { return std::exp(-x) * x * x; }, 1e-13);
  const double xs[] = {3.0, 1.0, 2.0, 1.5, 10.0, 0.25, 7.0, 3.0};
  for (double x : xs) {
    const double direct =
        adaptive_simpson([](double t) { return std::exp(-t) * t * t; }, 0.0, x, 1e-13);
    CHECK(F(x) == doctest::Approx(direct).epsilon(1e-10));
  }
  // Cached point returns the identical value.
  CHECK(F(3.0) == F(3.0));
}
