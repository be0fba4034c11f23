#pragma once

#include <functional>
#include <string>

#include "efsolve/ball_solver.hpp"
#include "efsolve/problem.hpp"

namespace efsolve {

// A problem with a known exact solution, built by choosing u* and reading
// the source p off the equation. Used for convergence-order verification.
struct ManufacturedCase {
  Problem problem;
  std::function<double(double)> exact;  // u*(r)
  std::string description;
};

// u*(r) = (1+r²)^(-1/2), N = 3, γ = 1, q ≡ 0:
//   -Δu* = 3(1+r²)^(-5/2)  =>  p = 3(1+r²)^(-3).
ManufacturedCase manufactured_no_gradient();

// Same u* with the gradient term active: q ≡ 1, a = 2,
//   |∇u*|² = r²(1+r²)^(-3)  =>  p = 3(1+r²)^(-3) + r²(1+r²)^(-7/2).
ManufacturedCase manufactured_gradient();

struct ManufacturedBallResult {
  double max_error = 0.0;     // max |u - u*| over all nodes
  double max_residual = 0.0;  // residual of the exact solution on this grid
  SolveReport report;
  RadialProfile profile;
  RadialGrid grid;
};

// Solves the case on the ball of radius R (Dirichlet data u*(R)) with the
// standard bracket machinery, and compares against u*.
ManufacturedBallResult run_manufactured_ball(const ManufacturedCase& mc, double R,
                                             double h, double newton_tol,
                                             int max_iter = 50);

struct ConvergenceOrder {
  double error_coarse = 0.0;
  double error_fine = 0.0;
  double order = 0.0;  // log2(error_coarse / error_fine) for h vs h/2
};

// Runs the ball at spacings h and h/2 and reports the observed order.
ConvergenceOrder observed_order(const ManufacturedCase& mc, double R, double h,
                                double newton_tol);

}  // namespace efsolve
