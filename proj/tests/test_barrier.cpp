#include <cmath>

#include <doctest.h>

#include "efsolve/barrier.hpp"
#include "efsolve/errors.hpp"

using namespace efsolve;

namespace {

MajorantProfile radial(double (*f)(double)) {
  return MajorantProfile{f, MajorantProfile::Provenance::kRadialP};
}

double phi_invsq(double r) { return std::pow(1.0 + r * r, -2.0); }
double phi_exp(double r) { return std::exp(-r); }
double phi_cube(double r) { return std::pow(1.0 + r, -3.0); }
double phi_log_divergent(double r) { return std::pow(1.0 + r, -2.0); }

}  // namespace

TEST_CASE("integrability verdicts against closed-form oracles") {
  // ∫ r(1+r)^-3 = 1/2,  ∫ r e^-r = 1,  ∫ r(1+r)^-2 diverges (log).
  const IntegrabilityVerdict a = check_integrability(radial(phi_cube), 1e-5);
  CHECK(a.classification == IntegrabilityVerdict::Classification::kConvergent);
  CHECK(std::abs(a.value_estimate - 0.5) < 1e-6);
  CHECK(a.error_estimate < 1e-5);

  const IntegrabilityVerdict b = check_integrability(radial(phi_exp), 1e-5);
  CHECK(b.classification == IntegrabilityVerdict::Classification::kConvergent);
  CHECK(std::abs(b.value_estimate - 1.0) < 1e-6);

  const IntegrabilityVerdict c = check_integrability(radial(phi_log_divergent), 1e-5);
  CHECK(c.classification == IntegrabilityVerdict::Classification::kDivergent);
}

TEST_CASE("K: both quadrature routes agree and match the closed forms") {
  // ∫ r(1+r²)^-2 = 1/2, so K = (N-2)^-1 / 2.
  const KResult k3 = compute_k(radial(phi_invsq), 3, 1e-7);
  CHECK(std::abs(k3.k_reduced - 0.5) < 1e-7);
  CHECK(std::abs(k3.k_double - k3.k_reduced) < 1e-6 * (1.0 + k3.k_reduced));

  const KResult k4 = compute_k(radial(phi_invsq), 4, 1e-7);
  CHECK(std::abs(k4.k_reduced - 0.25) < 1e-7);

  const KResult k5 = compute_k(radial(phi_invsq), 5, 1e-7);
  CHECK(std::abs(k5.k_reduced - 1.0 / 6.0) < 1e-7);

  const KResult ke = compute_k(radial(phi_exp), 3, 1e-7);
  CHECK(std::abs(ke.k_reduced - 1.0) < 1e-6);
  CHECK(std::abs(ke.k_double - ke.k_reduced) < 1e-6 * (1.0 + ke.k_reduced));
}

TEST_CASE("compute_k refuses a divergent majorant") {
  CHECK_THROWS_AS(compute_k(radial(phi_log_divergent), 3, 1e-7), quadrature_error);
}

TEST_CASE("barrier algebra: c closed forms and v(0) = c") {
  const KResult k = compute_k(radial(phi_invsq), 3, 1e-7);  // K = 1/2
  const RadialGrid grid(20.0, 1999);

  SUBCASE("gamma = 1: c = sqrt(1.5)") {
    const BarrierData b = compute_barrier(radial(phi_invsq), 3, 1.0, grid, k);
    CHECK(b.c == doctest::Approx(1.2247448713915890).epsilon(1e-7));
    CHECK(b.v_samples[0] == doctest::Approx(b.c).epsilon(1e-15));
    CHECK(b.w_samples[0] == b.K);
  }
  SUBCASE("gamma = 2: c = 2^(1/3)") {
    const BarrierData b = compute_barrier(radial(phi_invsq), 3, 2.0, grid, k);
    CHECK(b.c == doctest::Approx(1.2599210498948732).epsilon(1e-7));
    CHECK(b.v_samples[0] == doctest::Approx(b.c).epsilon(1e-15));
  }
}

TEST_CASE("w and v are nonincreasing and v stays below c") {
  const KResult k = compute_k(radial(phi_exp), 3, 1e-7);
  const RadialGrid grid(40.0, 3999);
  const BarrierData b = compute_barrier(radial(phi_exp), 3, 0.5, grid, k);
  for (int i = 0; i + 1 < grid.node_count(); ++i) {
    CHECK(b.w_samples[i + 1] <= b.w_samples[i]);
    CHECK(b.v_samples[i + 1] <= b.v_samples[i] * (1.0 + 1e-15));
  }
  const double ulp_c = std::nextafter(b.c, INFINITY) - b.c;
  for (int i = 0; i < grid.node_count(); ++i) {
    CHECK(b.v_samples[i] <= b.c + 4.0 * ulp_c);
  }
  CHECK(b.w_samples[grid.node_count() - 1] > 0.0);
}

TEST_CASE("discrete supersolution margin tracks the continuous margin mid-domain") {
  // Frozen 50-digit oracle for Phi = (1+r²)^-2, N = 3, gamma = 1:
  //   margin_cont(1.0) = Phi v^{-2}(v-c) - 2 v'^2/v = -0.051709276834002703
  //   with v(1) = 1.129992575441884497.
  const KResult k = compute_k(radial(phi_invsq), 3, 1e-7);
  const RadialGrid grid(10.0, 999);  // h = 0.01
  const BarrierData b = compute_barrier(radial(phi_invsq), 3, 1.0, grid, k);
  const SupersolutionReport rep = verify_supersolution(b, radial(phi_invsq), grid, 3);
  const int i1 = 100;  // r = 1.0
  CHECK(grid.r(i1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(b.v_samples[i1] == doctest::Approx(1.129992575441884497).epsilon(1e-9));
  CHECK(rep.margins[i1] == doctest::Approx(-0.051709276834002703).epsilon(5e-4));
}

TEST_CASE("supersolution check passes for the reference potentials at h=0.01") {
  const RadialGrid grid(40.0, 3999);
  for (auto phi_fn : {phi_invsq, phi_exp, phi_cube}) {
    const MajorantProfile phi = radial(phi_fn);
    const KResult k = compute_k(phi, 3, 1e-7);
    for (double gamma : {0.5, 1.0, 2.0}) {
      const BarrierData b = compute_barrier(phi, 3, gamma, grid, k);
      const SupersolutionReport rep = verify_supersolution(b, phi, grid, 3);
      CHECK_MESSAGE(rep.passed, rep.message);
    }
  }
}

TEST_CASE("a deflated barrier is flagged as a violation") {
  // 0.1*v breaks the inequality: v^-gamma grows by 10^gamma while Δv shrinks.
  const MajorantProfile phi = radial(phi_invsq);
  const KResult k = compute_k(phi, 3, 1e-7);
  const RadialGrid grid(10.0, 999);
  BarrierData b = compute_barrier(phi, 3, 1.0, grid, k);
  for (auto& v : b.v_samples.values) v *= 0.1;
  const SupersolutionReport rep = verify_supersolution(b, phi, grid, 3);
  CHECK_FALSE(rep.passed);
  CHECK(rep.worst_adjusted_margin > 0.0);
}

TEST_CASE("where Phi vanishes the margin reduces to the discrete laplacian") {
  // Phi supported on [0, 2]: w keeps decreasing past the support (the inner
  // mass is positive), so v' < 0 there and the strict margin comes entirely
  // from Δv.
  const MajorantProfile phi = radial(+[](double r) { return r < 2.0 ? 1.0 : 0.0; });
  const KResult k = compute_k(phi, 3, 1e-6);
  const RadialGrid grid(8.0, 799);
  const BarrierData b = compute_barrier(phi, 3, 1.0, grid, k);
  const SupersolutionReport rep = verify_supersolution(b, phi, grid, 3);
  const LaplacianResult lap = discrete_laplacian(b.v_samples, 3);
  for (int i = 500; i <= 700; ++i) {  // r in [5, 7], inside the Phi = 0 zone
    CHECK(rep.margins[i] == lap.values[i]);
    CHECK(rep.margins[i] < 0.0);
  }
}
