#include "efsolve/grid.hpp"

#include <algorithm>
#include <cmath>

#include "efsolve/errors.hpp"

namespace efsolve {

RadialGrid::RadialGrid(double radius, int interior_nodes)
    : R(radius), M(interior_nodes) {
  if (!(radius > 0.0)) throw invariant_violation("grid radius must be positive");
  if (interior_nodes < 16) {
    throw invariant_violation("grid needs at least 16 interior nodes");
  }
}

RadialGrid RadialGrid::with_spacing(double radius, double h_target) {
  if (!(h_target > 0.0)) throw invariant_violation("grid spacing must be positive");
  const int intervals = std::max(17, static_cast<int>(std::lround(radius / h_target)));
  return RadialGrid(radius, intervals - 1);
}

double RadialProfile::interpolate(double r) const {
  const double h = grid.h();
  if (r <= 0.0) return values.front();
  if (r >= grid.R) return values.back();
  const double s = r / h;
  int i = static_cast<int>(s);
  if (i >= size() - 1) i = size() - 2;
  const double t = s - i;
  if (t == 0.0) return values[static_cast<std::size_t>(i)];
  return (1.0 - t) * values[static_cast<std::size_t>(i)] +
         t * values[static_cast<std::size_t>(i + 1)];
}

double RadialProfile::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

LaplacianResult discrete_laplacian(const RadialProfile& u, int dimension) {
  const int M = u.grid.M;
  if (M < 2) throw invariant_violation("discrete_laplacian needs M >= 2");
  const double h = u.grid.h();
  const double h2 = h * h;
  LaplacianResult out;
  out.values = RadialProfile(u.grid);
  out.values[0] = 2.0 * dimension * (u[1] - u[0]) / h2;
  for (int i = 1; i <= M; ++i) {
    const double ri = u.grid.r(i);
    out.values[i] = (u[i + 1] - 2.0 * u[i] + u[i - 1]) / h2 +
                    (dimension - 1) / ri * (u[i + 1] - u[i - 1]) / (2.0 * h);
  }
  out.values[M + 1] = 0.0;
  out.boundary_defined = false;
  return out;
}

void solve_tridiagonal(std::vector<double>& lower, std::vector<double>& diag,
                       std::vector<double>& upper, std::vector<double>& rhs) {
  const std::size_t n = diag.size();
  if (lower.size() != n || upper.size() != n || rhs.size() != n) {
    throw invariant_violation("tridiagonal band size mismatch");
  }
  for (std::size_t i = 1; i < n; ++i) {
    const double w = lower[i] / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  rhs[n - 1] /= diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
  }
}

}  // namespace efsolve
