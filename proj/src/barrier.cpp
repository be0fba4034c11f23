#include "efsolve/barrier.hpp"

#include <cmath>
#include <sstream>

#include "efsolve/errors.hpp"

namespace efsolve {

namespace {

double ulp_of(double x) {
  const double ax = std::abs(x);
  return std::nextafter(ax, INFINITY) - ax;
}

}  // namespace

const char* to_string(IntegrabilityVerdict::Classification c) {
  switch (c) {
    case IntegrabilityVerdict::Classification::kConvergent: return "convergent";
    case IntegrabilityVerdict::Classification::kDivergent: return "divergent";
    case IntegrabilityVerdict::Classification::kIndeterminate: return "indeterminate";
  }
  return "?";
}

IntegrabilityVerdict check_integrability(const MajorantProfile& phi, double tol) {
  TailOptions opt;
  opt.tol = tol;
  opt.max_doublings = 20;
  opt.simpson_tol = std::min(1e-10, tol * 1e-4);
  const auto fn = [&phi](double r) { return r * phi(r); };
  const TailIntegral t = integrate_to_infinity(fn, opt);

  IntegrabilityVerdict out;
  out.tail_bound_used = t.truncation_radius;
  out.error_estimate = t.error_estimate;
  switch (t.verdict) {
    case TailIntegral::Verdict::kConvergent:
      out.classification = IntegrabilityVerdict::Classification::kConvergent;
      out.value_estimate = t.value;
      break;
    case TailIntegral::Verdict::kDivergent:
      out.classification = IntegrabilityVerdict::Classification::kDivergent;
      out.value_estimate = t.last_partial;
      break;
    case TailIntegral::Verdict::kIndeterminate:
      out.classification = IntegrabilityVerdict::Classification::kIndeterminate;
      out.value_estimate = t.last_partial;
      break;
  }
  return out;
}

KResult compute_k(const MajorantProfile& phi, int dimension, double tol) {
  if (dimension < 3) {
    throw invariant_violation("compute_k requires N >= 3");
  }
  // Both routes share one doubling/extrapolation scheme, pushed to a higher
  // cap than the classifier: the nested integrand decays like log(ζ)/ζ² for
  // the slowest admissible tails and needs T ~ 2^26 for 1e-8 truncation.
  TailOptions opt;
  opt.tol = std::clamp(tol * 1e-2, 1e-12, 1e-8);
  opt.max_doublings = 26;
  opt.simpson_tol = 1e-12;

  const auto reduced_fn = [&phi](double r) { return r * phi(r); };
  const TailIntegral reduced = integrate_to_infinity(reduced_fn, opt);
  if (reduced.verdict == TailIntegral::Verdict::kDivergent) {
    throw quadrature_error("compute_k: the decay integral diverges");
  }
  const double k_reduced = reduced.value / (dimension - 2);

  const int N = dimension;
  CumulativeIntegral inner([&phi, N](double s) { return std::pow(s, N - 1) * phi(s); },
                           1e-12);
  const auto nested_fn = [&inner, N](double z) {
    if (z <= 0.0) return 0.0;
    return std::pow(z, 1 - N) * inner(z);
  };
  const TailIntegral nested = integrate_to_infinity(nested_fn, opt);
  const double k_double = nested.value;

  KResult out{k_double, k_reduced};
  if (std::abs(k_double - k_reduced) > 10.0 * tol * (1.0 + k_reduced)) {
    std::ostringstream os;
    os << "compute_k cross-check failure: nested form " << k_double
       << " vs reduced form " << k_reduced << " (tol " << tol << ")";
    throw cross_check_error(os.str());
  }
  return out;
}

BarrierData compute_barrier(const MajorantProfile& phi, int dimension,
                            double gamma, const RadialGrid& grid,
                            const KResult& k) {
  if (!(gamma > 0.0)) throw invariant_violation("compute_barrier: gamma must be > 0");
  const int N = dimension;
  const double K = k.k();
  const double c = std::pow(K * (2.0 + gamma), 1.0 / (1.0 + gamma));

  CumulativeIntegral inner([&phi, N](double s) { return std::pow(s, N - 1) * phi(s); },
                           1e-12);
  const auto f = [&inner, N](double z) {
    if (z <= 0.0) return 0.0;
    return std::pow(z, 1 - N) * inner(z);
  };

  BarrierData out;
  out.K = K;
  out.c = c;
  out.gamma = gamma;
  out.w_samples = RadialProfile(grid);
  out.v_samples = RadialProfile(grid);

  // w by cumulative Simpson: each cell contributes (h/6)(f_i + 4f_mid +
  // f_{i+1}) >= 0, so w is nonincreasing without any tolerance games.
  const double h = grid.h();
  double acc = 0.0;
  out.w_samples[0] = K;
  double f_left = 0.0;
  for (int i = 0; i <= grid.M; ++i) {
    const double r_left = grid.r(i);
    const double f_mid = f(r_left + 0.5 * h);
    const double f_right = f(grid.r(i + 1));
    acc += h / 6.0 * (f_left + 4.0 * f_mid + f_right);
    out.w_samples[i + 1] = K - acc;
    f_left = f_right;
  }

  const double w_tail = out.w_samples[grid.M + 1];
  if (!(w_tail > 0.0)) {
    std::ostringstream os;
    os << "compute_barrier: w(" << grid.R << ") = " << w_tail
       << " is not positive; the grid extends past the barrier's resolvable "
          "tail (K quadrature and grid quadrature disagree)";
    throw invariant_violation(os.str());
  }

  const double exponent = 1.0 / (2.0 + gamma);
  for (int i = 0; i < grid.node_count(); ++i) {
    out.v_samples[i] = std::pow(c * (2.0 + gamma) * out.w_samples[i], exponent);
  }

  // Invariants before handing the barrier to a solver.
  if (std::abs(out.v_samples[0] - c) > 4.0 * ulp_of(c)) {
    throw invariant_violation("compute_barrier: v(0) != c beyond 4 ulp");
  }
  for (int i = 0; i + 1 < grid.node_count(); ++i) {
    if (out.w_samples[i + 1] > out.w_samples[i]) {
      throw invariant_violation("compute_barrier: w is not nonincreasing");
    }
    if (out.v_samples[i + 1] > out.v_samples[i] + ulp_of(out.v_samples[i])) {
      throw invariant_violation("compute_barrier: v is not nonincreasing");
    }
  }
  for (int i = 0; i < grid.node_count(); ++i) {
    if (out.v_samples[i] > c + 4.0 * ulp_of(c)) {
      throw invariant_violation("compute_barrier: v exceeds c");
    }
  }
  return out;
}

SupersolutionReport verify_supersolution(const BarrierData& barrier,
                                         const MajorantProfile& phi,
                                         const RadialGrid& grid,
                                         int dimension,
                                         double slack_factor) {
  const RadialProfile& v = barrier.v_samples;
  const int M = grid.M;
  const double h = grid.h();
  const double gamma = barrier.gamma;
  const int N = dimension;

  const LaplacianResult lap = discrete_laplacian(v, N);

  SupersolutionReport rep;
  rep.margins.assign(static_cast<std::size_t>(M + 1), 0.0);
  rep.slacks.assign(static_cast<std::size_t>(M + 1), 0.0);
  rep.passed = true;

  // Slack: Richardson estimate of the h² stencil truncation at each node,
  // from the difference between the h and 2h stencils. v is even in r, so
  // node -1 reflects to node 1; node M falls back to the node M-1 estimate.
  auto stencil_2h = [&](int i) {
    const int lo = std::abs(i - 2);
    const int hi = i + 2;
    const double ri = grid.r(i);
    return (v[hi] - 2.0 * v[i] + v[lo]) / (4.0 * h * h) +
           (N - 1) / ri * (v[hi] - v[lo]) / (4.0 * h);
  };

  double worst = -INFINITY;
  for (int i = 1; i <= M; ++i) {
    const double ri = grid.r(i);
    const double margin = lap.values[i] + phi(ri) * std::pow(v[i], -gamma);
    double slack;
    if (i + 2 <= M + 1) {
      slack = slack_factor * std::abs(lap.values[i] - stencil_2h(i)) / 3.0;
    } else {
      slack = rep.slacks[static_cast<std::size_t>(i - 1)];
    }
    rep.margins[static_cast<std::size_t>(i)] = margin;
    rep.slacks[static_cast<std::size_t>(i)] = slack;
    const double adjusted = margin - slack;
    if (adjusted > worst) {
      worst = adjusted;
      rep.worst_node = i;
    }
    if (!(adjusted < 0.0)) rep.passed = false;
  }
  rep.worst_adjusted_margin = worst;

  std::ostringstream os;
  if (rep.passed) {
    os << "supersolution inequality holds at all " << M
       << " interior nodes (worst margin-slack " << worst << " at node "
       << rep.worst_node << ")";
  } else {
    os << "supersolution-violation at node " << rep.worst_node << " (r = "
       << grid.r(rep.worst_node) << "): margin "
       << rep.margins[static_cast<std::size_t>(rep.worst_node)] << " vs slack "
       << rep.slacks[static_cast<std::size_t>(rep.worst_node)]
       << " (grid too coarse or K mis-computed)";
  }
  rep.message = os.str();
  return rep;
}

}  // namespace efsolve
