#include "efsolve/verify.hpp"

#include <cmath>

#include "efsolve/barrier.hpp"
#include "efsolve/eigen.hpp"
#include "efsolve/errors.hpp"

namespace efsolve {

ManufacturedCase manufactured_no_gradient() {
  ManufacturedCase mc;
  mc.problem = Problem{3, 1.0, 1.0,
                       PotentialSpec::from_expression("3*(1+r^2)^(-3)"),
                       PotentialSpec::constant(0.0), std::nullopt};
  mc.exact = [](double r) { return 1.0 / std::sqrt(1.0 + r * r); };
  mc.description = "u* = (1+r^2)^(-1/2), q = 0";
  return mc;
}

ManufacturedCase manufactured_gradient() {
  ManufacturedCase mc;
  mc.problem = Problem{3, 1.0, 2.0,
                       PotentialSpec::from_expression(
                           "3*(1+r^2)^(-3) + r^2*(1+r^2)^(-3.5)"),
                       PotentialSpec::constant(1.0), std::nullopt};
  mc.exact = [](double r) { return 1.0 / std::sqrt(1.0 + r * r); };
  mc.description = "u* = (1+r^2)^(-1/2), q = 1, a = 2";
  return mc;
}

ManufacturedBallResult run_manufactured_ball(const ManufacturedCase& mc, double R,
                                             double h, double newton_tol,
                                             int max_iter) {
  const MajorantProfile phi = majorant(mc.problem);
  const KResult k = compute_k(phi, mc.problem.dimension, 1e-7);
  const RadialGrid grid = RadialGrid::with_spacing(R, h);
  const BarrierData barrier =
      compute_barrier(phi, mc.problem.dimension, mc.problem.gamma, grid, k);
  const EigenPair eig = first_eigenpair(grid, mc.problem.dimension, 1e-12);
  double eps = choose_epsilon(mc.problem, eig, grid);
  for (int i = 0; i <= grid.M; ++i) {
    eps = std::min(eps, barrier.v_samples[i] / eig.phi1[i] * (1.0 - 0x1p-20));
  }

  BallProblem bp;
  bp.problem = mc.problem;
  bp.grid = grid;
  bp.boundary_value = mc.exact(R);
  bp.bracket_low = RadialProfile(grid);
  for (int i = 0; i < grid.node_count(); ++i) bp.bracket_low[i] = eps * eig.phi1[i];
  // The Dirichlet value must sit inside the bracket at the boundary node.
  bp.bracket_low[grid.M + 1] = 0.0;
  bp.bracket_high = barrier.v_samples;

  ManufacturedBallResult out;
  out.grid = grid;

  RadialProfile exact(grid);
  for (int i = 0; i < grid.node_count(); ++i) exact[i] = mc.exact(grid.r(i));
  const RadialProfile res_exact = nonlinear_residual(exact, bp);
  for (int i = 1; i <= grid.M; ++i) {
    out.max_residual = std::max(out.max_residual, std::abs(res_exact[i]));
  }

  auto [u, report] = solve_ball(bp, newton_tol, max_iter);
  for (int i = 0; i < grid.node_count(); ++i) {
    out.max_error = std::max(out.max_error, std::abs(u[i] - exact[i]));
  }
  out.report = std::move(report);
  out.profile = std::move(u);
  return out;
}

ConvergenceOrder observed_order(const ManufacturedCase& mc, double R, double h,
                                double newton_tol) {
  ConvergenceOrder out;
  out.error_coarse = run_manufactured_ball(mc, R, h, newton_tol).max_error;
  out.error_fine = run_manufactured_ball(mc, R, 0.5 * h, newton_tol).max_error;
  if (out.error_fine > 0.0) {
    out.order = std::log2(out.error_coarse / out.error_fine);
  } else {
    out.order = INFINITY;
  }
  return out;
}

}  // namespace efsolve
