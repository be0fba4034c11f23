#pragma once

#include "efsolve/grid.hpp"
#include "efsolve/problem.hpp"

namespace efsolve {

// First Dirichlet eigenpair of -Δ on the ball of radius grid.R: the smallest
// eigenvalue of the discrete radial operator (symmetry closure at 0, zero
// Dirichlet data at R) and its positive eigenfunction, normalized so the
// largest interior value is 1.
struct EigenPair {
  double lambda1 = 0.0;
  RadialProfile phi1;
};

// Inverse power iteration with tridiagonal solves; stops when successive
// Rayleigh quotients differ by less than tol. Throws convergence_error after
// max_iterations.
EigenPair first_eigenpair(const RadialGrid& grid, int dimension, double tol,
                          int max_iterations = 10000);

// The discrete subsolution inequality for eps*phi1:
//   eps*λ₁*φ₁ + q(r)*eps^a*|φ₁'|^a  <=  p(r)*eps^(-γ)*φ₁^(-γ)
// at every interior node, with φ₁' by central differences.
bool subsolution_holds(const Problem& problem, const EigenPair& eig,
                       const RadialGrid& grid, double eps);

// Largest scaling epsilon (<= 1) satisfying subsolution_holds. Found by
// halving from 1 until the inequality holds, then bisecting back toward the
// last failure; the returned value is re-checked before return. Throws
// convergence_error if no eps above 1e-300 works.
double choose_epsilon(const Problem& problem, const EigenPair& eig,
                      const RadialGrid& grid);

}  // namespace efsolve
