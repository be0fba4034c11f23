#pragma once

#include <string>
#include <vector>

#include "efsolve/grid.hpp"
#include "efsolve/potential.hpp"
#include "efsolve/quadrature.hpp"

namespace efsolve {

// Verdict on the decay condition  ∫₀^∞ r Φ(r) dr < ∞.
struct IntegrabilityVerdict {
  enum class Classification { kConvergent, kDivergent, kIndeterminate };
  Classification classification = Classification::kIndeterminate;
  double value_estimate = 0.0;   // ∫₀^∞ rΦ dr (convergent only)
  double tail_bound_used = 0.0;  // truncation radius actually reached
  double error_estimate = 0.0;
};

const char* to_string(IntegrabilityVerdict::Classification c);

// Classifies the decay integral by doubling truncation radii 2^0..2^20;
// convergent once three consecutive partial differences fall below
// tol*(1+|partial|), divergent when the final five doublings grow by more
// than 1, indeterminate otherwise. The convergent value estimate carries a
// geometric tail correction so that error_estimate < tol holds.
IntegrabilityVerdict check_integrability(const MajorantProfile& phi, double tol);

// The barrier constant, computed both ways:
//   K_double  — nested quadrature of ∫₀^∞ ζ^(1-N) ∫₀^ζ σ^(N-1)Φ(σ) dσ dζ
//   K_reduced — (N-2)^(-1) ∫₀^∞ rΦ(r) dr
// The two agree analytically (integration by parts plus the vanishing
// boundary term); compute_k enforces |K_double - K_reduced| <=
// 10*tol*(1+K_reduced) and throws cross_check_error otherwise.
struct KResult {
  double k_double = 0.0;
  double k_reduced = 0.0;
  // Canonical value used downstream (the reduced form, whose quadrature is
  // one-dimensional and tighter).
  double k() const { return k_reduced; }
};

KResult compute_k(const MajorantProfile& phi, int dimension, double tol);

// The supersolution machinery on a grid:
//   w(r) = K - ∫₀^r ζ^(1-N) ∫₀^ζ σ^(N-1)Φ dσ dζ   (so -Δw = Φ, w(0) = K)
//   c    = [K(2+γ)]^(1/(1+γ))
//   v(r) = [c(2+γ)w(r)]^(1/(2+γ))                  (so v(0) = c, v ≤ c)
struct BarrierData {
  double K = 0.0;
  double c = 0.0;
  double gamma = 0.0;
  RadialProfile w_samples;
  RadialProfile v_samples;
};

// Cumulative per-interval Simpson for w on the grid (midpoint rule inside
// each cell keeps w exactly nonincreasing); closed forms for c and v. All
// BarrierData invariants are verified before returning:
// w nonincreasing with w > 0, v(0) = c, v nonincreasing, v <= c.
BarrierData compute_barrier(const MajorantProfile& phi, int dimension,
                            double gamma, const RadialGrid& grid,
                            const KResult& k);

// Discrete check of the strict supersolution inequality Δv + Φ v^(-γ) < 0.
// The raw discrete margin carries the stencil truncation (O(h²·v'''/r) near
// the axis), so each node is tested against an h²-scaled local slack
// estimated by comparing the h and 2h stencils (Richardson).
struct SupersolutionReport {
  bool passed = false;
  int worst_node = -1;
  double worst_adjusted_margin = 0.0;  // max over nodes of margin - slack
  std::vector<double> margins;         // raw margin per node, 1..M (index 0 unused)
  std::vector<double> slacks;
  std::string message;
};

SupersolutionReport verify_supersolution(const BarrierData& barrier,
                                         const MajorantProfile& phi,
                                         const RadialGrid& grid,
                                         int dimension,
                                         double slack_factor = 3.0);

}  // namespace efsolve
