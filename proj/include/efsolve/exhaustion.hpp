#pragma once

#include <vector>

#include "efsolve/ball_solver.hpp"
#include "efsolve/barrier.hpp"
#include "efsolve/eigen.hpp"
#include "efsolve/problem.hpp"

namespace efsolve {

// Controls for the exhaustion run: the increasing radius schedule, the grid
// spacing target, and the stopping tolerances. The Cauchy tolerance acts on
// the sup-norm gap between consecutive solutions restricted to the
// comparison window [0, radii.front()]; tail_tol bounds the barrier value at
// the final radius (the computable form of decay at infinity).
struct ExhaustionConfig {
  std::vector<double> radii = default_radii();
  double h = 0.01;
  double cauchy_tol = 5e-3;
  double tail_tol = 0.5;
  double newton_tol = 1e-9;
  int max_iter = 50;
  double eigen_tol = 1e-12;
  double k_tol = 1e-7;
  double integrability_tol = 1e-5;

  static std::vector<double> default_radii();  // 5 * 2^k, 8 terms
  void validate() const;
};

// Per-ball diagnostics kept for reporting.
struct BallDiagnostics {
  double radius = 0.0;
  double lambda1 = 0.0;
  double epsilon = 0.0;
  SolveReport report;
};

struct EntireSolution {
  RadialProfile profile;    // solution on the final ball solved
  RadialProfile barrier_v;  // v on the same grid
  std::vector<double> radii_used;
  std::vector<double> successive_gaps;  // window sup-norm, one per ball after the first
  double tail_value = 0.0;              // v at the final radius
  bool certified = false;
  double K = 0.0;
  double c = 0.0;
  std::vector<BallDiagnostics> balls;
};

// The constructive existence run: solve on each ball of the schedule from
// the barrier downward, enforce the monotone sandwich
// u_1 <= u_2 <= ... <= v (nodewise, 1e-10 tolerance), and stop once the
// window gap is below cauchy_tol with the barrier below tail_tol at the
// boundary. Exhausting the schedule returns an uncertified solution rather
// than throwing; a sandwich violation throws invariant_violation (it signals
// a solver failure, not a math failure).
EntireSolution solve_entire(const Problem& problem, const ExhaustionConfig& config);

// Cross-initialization uniqueness probe on the final ball of a solve_entire
// run: one solve starts at the supersolution, the other at the bracket
// midpoint, and the sup-norm difference of the converged profiles is
// compared against 10 * newton_tol. Not applicable when the run does not
// certify.
struct ProbeReport {
  bool applicable = false;
  bool passed = false;
  double m_hat = 0.0;      // sup-norm disagreement
  double threshold = 0.0;  // 10 * newton_tol
  double radius = 0.0;
  SolveReport from_supersolution;
  SolveReport from_midpoint;
};

ProbeReport uniqueness_probe(const Problem& problem, const ExhaustionConfig& config);

}  // namespace efsolve
