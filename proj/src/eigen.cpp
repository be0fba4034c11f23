#include "efsolve/eigen.hpp"

#include <cmath>

#include "efsolve/errors.hpp"

namespace efsolve {

namespace {

// Bands of the discrete -Δ with symmetry closure at node 0 and Dirichlet
// data at node M+1 (eliminated). Unknowns are nodes 0..M.
struct OperatorBands {
  std::vector<double> lower, diag, upper;
};

OperatorBands assemble_neg_laplacian(const RadialGrid& grid, int N) {
  const int n = grid.M + 1;
  const double h = grid.h();
  const double h2 = h * h;
  OperatorBands b;
  b.lower.assign(n, 0.0);
  b.diag.assign(n, 0.0);
  b.upper.assign(n, 0.0);
  b.diag[0] = 2.0 * N / h2;
  b.upper[0] = -2.0 * N / h2;
  for (int i = 1; i <= grid.M; ++i) {
    const double ri = grid.r(i);
    const double adv = (N - 1) / (2.0 * h * ri);
    b.lower[i] = -1.0 / h2 + adv;
    b.diag[i] = 2.0 / h2;
    if (i < grid.M) b.upper[i] = -1.0 / h2 - adv;
    // i == M: the u_{M+1} coefficient multiplies the boundary value 0.
  }
  return b;
}

}  // namespace

EigenPair first_eigenpair(const RadialGrid& grid, int dimension, double tol,
                          int max_iterations) {
  const OperatorBands bands = assemble_neg_laplacian(grid, dimension);
  const int n = grid.M + 1;

  std::vector<double> x(n, 1.0);
  double lambda_prev = 0.0;
  bool have_prev = false;

  for (int iter = 0; iter < max_iterations; ++iter) {
    std::vector<double> lower = bands.lower;
    std::vector<double> diag = bands.diag;
    std::vector<double> upper = bands.upper;
    std::vector<double> y = x;
    solve_tridiagonal(lower, diag, upper, y);

    double xy = 0.0, yy = 0.0;
    for (int i = 0; i < n; ++i) {
      xy += x[i] * y[i];
      yy += y[i] * y[i];
    }
    const double lambda = xy / yy;

    double ymax = 0.0;
    for (double v : y) ymax = std::max(ymax, std::abs(v));
    for (int i = 0; i < n; ++i) x[i] = y[i] / ymax;

    if (have_prev && std::abs(lambda - lambda_prev) < tol) {
      EigenPair out;
      out.lambda1 = lambda;
      out.phi1 = RadialProfile(grid);
      double interior_max = 0.0;
      for (int i = 1; i <= grid.M; ++i) interior_max = std::max(interior_max, x[i]);
      if (!(interior_max > 0.0)) {
        throw convergence_error("eigenfunction lost positivity");
      }
      for (int i = 0; i <= grid.M; ++i) {
        out.phi1[i] = x[i] / interior_max;
        if (i >= 1 && !(out.phi1[i] > 0.0)) {
          throw convergence_error("eigenfunction not positive at an interior node");
        }
      }
      out.phi1[grid.M + 1] = 0.0;
      return out;
    }
    lambda_prev = lambda;
    have_prev = true;
  }
  throw convergence_error("first_eigenpair: no convergence within iteration cap");
}

bool subsolution_holds(const Problem& problem, const EigenPair& eig,
                       const RadialGrid& grid, double eps) {
  const int M = grid.M;
  const double h = grid.h();
  const double gamma = problem.gamma;
  const double a = problem.a;
  const double lambda = eig.lambda1;
  for (int i = 1; i <= M; ++i) {
    const double ri = grid.r(i);
    const double phi = eig.phi1[i];
    const double dphi = std::abs(eig.phi1[i + 1] - eig.phi1[i - 1]) / (2.0 * h);
    const double lhs =
        eps * lambda * phi + problem.q(ri) * std::pow(eps, a) * std::pow(dphi, a);
    const double rhs = problem.p(ri) * std::pow(eps, -gamma) * std::pow(phi, -gamma);
    if (!(lhs <= rhs)) return false;
  }
  return true;
}

double choose_epsilon(const Problem& problem, const EigenPair& eig,
                      const RadialGrid& grid) {
  auto satisfied = [&](double eps) {
    return subsolution_holds(problem, eig, grid, eps);
  };

  double eps = 1.0;
  if (!satisfied(eps)) {
    double fail = eps;
    while (!satisfied(eps)) {
      fail = eps;
      eps *= 0.5;
      if (eps < 1e-300) {
        throw convergence_error(
            "choose_epsilon: no admissible scaling above 1e-300 (p vanishing "
            "or q exploding on this grid?)");
      }
    }
    // Push the subsolution back up toward the feasibility boundary.
    double pass = eps;
    for (int it = 0; it < 40; ++it) {
      const double mid = 0.5 * (pass + fail);
      if (satisfied(mid)) {
        pass = mid;
      } else {
        fail = mid;
      }
    }
    eps = pass;
  }

  if (!satisfied(eps)) {
    throw invariant_violation("choose_epsilon: returned value failed its re-check");
  }
  return eps;
}

}  // namespace efsolve
