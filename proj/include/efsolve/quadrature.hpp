#pragma once

#include <functional>
#include <map>
#include <vector>

namespace efsolve {

using RealFn = std::function<double(double)>;

// Classic recursive adaptive Simpson on [a, b]. tol is an absolute error
// target for the whole interval (the usual 15x acceptance test).
double adaptive_simpson(const RealFn& f, double a, double b, double tol,
                        int max_depth = 48);

// Result of integrating f over [0, inf) by doubling truncation radii.
struct TailIntegral {
  enum class Verdict { kConvergent, kDivergent, kIndeterminate };
  Verdict verdict = Verdict::kIndeterminate;
  double value = 0.0;            // tail-extrapolated estimate (convergent only)
  double last_partial = 0.0;     // integral over [0, T_stop]
  double truncation_radius = 0.0;
  double error_estimate = 0.0;
  std::vector<double> partials;  // one entry per doubling step
};

struct TailOptions {
  double tol = 1e-5;              // convergence threshold on partial diffs
  int max_doublings = 20;         // T runs over 2^0 .. 2^max_doublings
  double divergence_margin = 1.0; // growth over the last 5 doublings
  int required_streak = 3;        // consecutive small diffs for "convergent"
  double simpson_tol = 1e-12;     // per-segment absolute quadrature target
};

// Integrates f over [0, inf) with partials at T = 1, 2, 4, ..., classifying
// convergence from the partial differences:
//  - convergent: required_streak consecutive diffs below tol*(1+|partial|);
//    the value gets a geometric tail correction d*rho/(1-rho) from the last
//    two diffs (skipped when the ratio is not in (0, 0.95)).
//  - divergent: never convergent and the last five doublings grew by more
//    than divergence_margin (decided after the loop, so slowly settling
//    convergent integrands are not misread).
//  - indeterminate otherwise.
TailIntegral integrate_to_infinity(const RealFn& f, const TailOptions& opt);

// Cumulative prefix integral F(x) = int_0^x f, memoized at every queried x.
// Each query extends from the nearest cached point below x by adaptive
// Simpson, so nested quadratures stay near-linear in total evaluations.
// Not thread-safe; intended as a per-computation scratch object.
class CumulativeIntegral {
 public:
  CumulativeIntegral(RealFn f, double rel_tol = 1e-12);

  double operator()(double x);

 private:
  RealFn f_;
  double rel_tol_;
  std::map<double, double> cache_;  // x -> int_0^x f
};

}  // namespace efsolve
