#pragma once

#include <cstddef>
#include <vector>

namespace efsolve {

// Uniform grid on [0, R] with M interior nodes: r_i = i*h, i = 0..M+1,
// h = R/(M+1). Node 0 is the symmetry point r = 0 and node M+1 the Dirichlet
// boundary r = R; "interior" always means i = 1..M.
struct RadialGrid {
  double R = 1.0;
  int M = 16;

  RadialGrid() = default;
  RadialGrid(double radius, int interior_nodes);

  // Grid with spacing as close as possible to h_target (exact when R is an
  // integer multiple of it).
  static RadialGrid with_spacing(double radius, double h_target);

  double h() const { return R / (M + 1); }
  int node_count() const { return M + 2; }
  double r(int i) const { return i * h(); }
};

// Nodal values of a radial function on a RadialGrid (endpoints included).
struct RadialProfile {
  RadialGrid grid;
  std::vector<double> values;

  RadialProfile() = default;
  explicit RadialProfile(const RadialGrid& g)
      : grid(g), values(static_cast<std::size_t>(g.node_count()), 0.0) {}

  double& operator[](int i) { return values[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
  int size() const { return static_cast<int>(values.size()); }

  // Piecewise-linear evaluation at any radius in [0, R]; exact at nodes.
  double interpolate(double r) const;

  double max_abs() const;
};

// Samples a callable on the grid nodes.
template <typename Fn>
RadialProfile sample_on_grid(const RadialGrid& grid, Fn&& fn) {
  RadialProfile out(grid);
  for (int i = 0; i < grid.node_count(); ++i) out[i] = fn(grid.r(i));
  return out;
}

// Discrete radial Laplacian  u'' + (N-1)/r * u'  with second-order central
// differences at interior nodes and the symmetry closure
// Δu(0) ≈ 2N(u_1 - u_0)/h² at the origin (valid when u'(0) = 0). The value
// at r = R is undefined for this stencil and is set to 0; boundary_defined
// reports that convention.
struct LaplacianResult {
  RadialProfile values;
  bool boundary_defined = false;  // node M+1 is a filler zero
};

LaplacianResult discrete_laplacian(const RadialProfile& u, int dimension);

// Solves a tridiagonal system in place (Thomas algorithm, no pivoting; all
// systems in this library are irreducibly diagonally dominant M-matrices).
// diag/lower/upper are the three bands; rhs is overwritten with the solution.
void solve_tridiagonal(std::vector<double>& lower, std::vector<double>& diag,
                       std::vector<double>& upper, std::vector<double>& rhs);

}  // namespace efsolve
