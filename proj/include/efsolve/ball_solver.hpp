#pragma once

#include <vector>

#include "efsolve/grid.hpp"
#include "efsolve/problem.hpp"

namespace efsolve {

// The truncated Dirichlet problem on the ball of radius grid.R:
//   -Δu + q(r)|u'|^a = p(r) u^(-γ),  u(R) = boundary_value,  u'(0) = 0,
// bracketed between a subsolution (ε·φ₁) and a supersolution (the barrier v
// restricted to the grid). boundary_value is 0 for the actual problem;
// nonzero values exist solely for manufactured-solution verification.
struct BallProblem {
  Problem problem;
  RadialGrid grid;
  double boundary_value = 0.0;
  RadialProfile bracket_low;
  RadialProfile bracket_high;

  // Regularization for |s|^a at s = 0: |s|_reg^a = (s² + eps_g²)^(a/2).
  double gradient_regularization = 1e-12;

  void validate() const;  // bracket ordering and positivity
};

struct SolveReport {
  int iterations = 0;
  std::vector<double> residual_history;
  double final_residual = 0.0;
  int bracket_projections = 0;  // nodes clamped on accepted steps
  int damping_events = 0;       // accepted steps with step length < 1
  double gradient_regularization = 1e-12;
  bool converged = false;
};

// F(u) at nodes 0..M (node 0 through the symmetry stencil with |∇u(0)| = 0),
// plus the Dirichlet residual u(R) - boundary_value at node M+1. Throws
// invariant_violation if any u_i <= 0 for i = 0..M.
RadialProfile nonlinear_residual(const RadialProfile& u, const BallProblem& bp);

// Damped Newton on F(u) = 0 from the supersolution: analytic tridiagonal
// Jacobian, backtracking line search on the residual max norm (Armijo 1e-4),
// every trial point projected into [bracket_low, bracket_high]. Converged
// when the residual max norm over nodes 0..M drops below tol.
//
// initial overrides the starting iterate (default: bracket_high). The
// uniqueness probe passes the bracket midpoint here.
//
// polish_steps extra full Newton steps are attempted after convergence
// (accepted only if the residual does not grow); the uniqueness probe uses
// them to drive both of its runs to the rounding floor of the same root.
std::pair<RadialProfile, SolveReport> solve_ball(const BallProblem& bp,
                                                 double tol, int max_iter,
                                                 int polish_steps = 0,
                                                 const RadialProfile* initial = nullptr);

}  // namespace efsolve
