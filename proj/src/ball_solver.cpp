#include "efsolve/ball_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "efsolve/errors.hpp"

namespace efsolve {

namespace {

constexpr double kArmijo = 1e-4;
constexpr int kMaxHalvings = 40;

struct NodeData {
  std::vector<double> p, q;  // potentials at nodes 0..M
};

NodeData sample_potentials(const BallProblem& bp) {
  const int M = bp.grid.M;
  NodeData nd;
  nd.p.resize(static_cast<std::size_t>(M + 1));
  nd.q.resize(static_cast<std::size_t>(M + 1));
  for (int i = 0; i <= M; ++i) {
    nd.p[static_cast<std::size_t>(i)] = bp.problem.p(bp.grid.r(i));
    nd.q[static_cast<std::size_t>(i)] = bp.problem.q(bp.grid.r(i));
  }
  return nd;
}

// Residual at nodes 0..M into out (size M+1). u must be positive there.
void residual_interior(const RadialProfile& u, const BallProblem& bp,
                       const NodeData& nd, std::vector<double>& out) {
  const int M = bp.grid.M;
  const int N = bp.problem.dimension;
  const double h = bp.grid.h();
  const double h2 = h * h;
  const double gamma = bp.problem.gamma;
  const double a = bp.problem.a;
  const double eg2 = bp.gradient_regularization * bp.gradient_regularization;

  out[0] = -2.0 * N * (u[1] - u[0]) / h2 + nd.q[0] * std::pow(eg2, 0.5 * a) -
           nd.p[0] * std::pow(u[0], -gamma);
  for (int i = 1; i <= M; ++i) {
    const double ri = bp.grid.r(i);
    const double lap = (u[i + 1] - 2.0 * u[i] + u[i - 1]) / h2 +
                       (N - 1) / ri * (u[i + 1] - u[i - 1]) / (2.0 * h);
    const double d = (u[i + 1] - u[i - 1]) / (2.0 * h);
    out[static_cast<std::size_t>(i)] =
        -lap + nd.q[static_cast<std::size_t>(i)] * std::pow(d * d + eg2, 0.5 * a) -
        nd.p[static_cast<std::size_t>(i)] * std::pow(u[i], -gamma);
  }
}

double max_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

void clamp_profile(RadialProfile& u, const BallProblem& bp, int* projections) {
  for (int i = 0; i <= bp.grid.M; ++i) {
    const double lo = bp.bracket_low[i];
    const double hi = bp.bracket_high[i];
    const double c = std::min(std::max(u[i], lo), hi);
    if (c != u[i]) {
      u[i] = c;
      if (projections) ++*projections;
    }
  }
}

}  // namespace

void BallProblem::validate() const {
  if (bracket_low.size() != grid.node_count() ||
      bracket_high.size() != grid.node_count()) {
    throw invariant_violation("ball problem: bracket profiles do not match the grid");
  }
  for (int i = 0; i < grid.node_count(); ++i) {
    if (bracket_low[i] > bracket_high[i]) {
      std::ostringstream os;
      os << "bracket-collapse: bracket_low > bracket_high at node " << i
         << " (r = " << grid.r(i) << ")";
      throw invariant_violation(os.str());
    }
  }
  for (int i = 0; i <= grid.M; ++i) {
    if (!(bracket_low[i] > 0.0)) {
      throw invariant_violation("ball problem: bracket_low must be positive away from r = R");
    }
  }
  if (boundary_value < 0.0) {
    throw invariant_violation("ball problem: boundary value must be nonnegative");
  }
}

RadialProfile nonlinear_residual(const RadialProfile& u, const BallProblem& bp) {
  const int M = bp.grid.M;
  for (int i = 0; i <= M; ++i) {
    if (!(u[i] > 0.0)) {
      std::ostringstream os;
      os << "nonpositive-iterate: u = " << u[i] << " at node " << i;
      throw invariant_violation(os.str());
    }
  }
  const NodeData nd = sample_potentials(bp);
  std::vector<double> f(static_cast<std::size_t>(M + 1));
  residual_interior(u, bp, nd, f);
  RadialProfile out(bp.grid);
  for (int i = 0; i <= M; ++i) out[i] = f[static_cast<std::size_t>(i)];
  out[M + 1] = u[M + 1] - bp.boundary_value;
  return out;
}

std::pair<RadialProfile, SolveReport> solve_ball(const BallProblem& bp,
                                                 double tol, int max_iter,
                                                 int polish_steps,
                                                 const RadialProfile* initial) {
  bp.validate();
  const int M = bp.grid.M;
  const int n = M + 1;
  const int N = bp.problem.dimension;
  const double h = bp.grid.h();
  const double h2 = h * h;
  const double gamma = bp.problem.gamma;
  const double a = bp.problem.a;
  const double eg2 = bp.gradient_regularization * bp.gradient_regularization;
  const NodeData nd = sample_potentials(bp);

  SolveReport report;
  report.gradient_regularization = bp.gradient_regularization;

  // Start at the supersolution unless told otherwise; node M+1 carries the
  // Dirichlet value either way.
  RadialProfile u = initial ? *initial : bp.bracket_high;
  if (u.size() != bp.grid.node_count()) {
    throw invariant_violation("solve_ball: initial iterate does not match the grid");
  }
  clamp_profile(u, bp, nullptr);
  u[M + 1] = bp.boundary_value;

  std::vector<double> f(static_cast<std::size_t>(n));
  std::vector<double> f_trial(static_cast<std::size_t>(n));
  std::vector<double> lower(static_cast<std::size_t>(n));
  std::vector<double> diag(static_cast<std::size_t>(n));
  std::vector<double> upper(static_cast<std::size_t>(n));
  std::vector<double> step(static_cast<std::size_t>(n));

  residual_interior(u, bp, nd, f);
  double res = max_norm(f);
  report.residual_history.push_back(res);

  auto newton_step = [&]() {
    // Analytic tridiagonal Jacobian. The singular term contributes
    // +γ p u^(-γ-1) on the diagonal (positive, reinforcing dominance); the
    // gradient term couples to the off-diagonals through the central
    // difference.
    lower.assign(static_cast<std::size_t>(n), 0.0);
    upper.assign(static_cast<std::size_t>(n), 0.0);
    diag[0] = 2.0 * N / h2 + gamma * nd.p[0] * std::pow(u[0], -gamma - 1.0);
    upper[0] = -2.0 * N / h2;
    for (int i = 1; i <= M; ++i) {
      const std::size_t si = static_cast<std::size_t>(i);
      const double ri = bp.grid.r(i);
      const double adv = (N - 1) / (2.0 * h * ri);
      const double d = (u[i + 1] - u[i - 1]) / (2.0 * h);
      const double dgrad =
          nd.q[si] * a * d * std::pow(d * d + eg2, 0.5 * a - 1.0) / (2.0 * h);
      lower[si] = -1.0 / h2 + adv - dgrad;
      diag[si] = 2.0 / h2 + gamma * nd.p[si] * std::pow(u[i], -gamma - 1.0);
      if (i < M) upper[si] = -1.0 / h2 - adv + dgrad;
    }
    for (int i = 0; i < n; ++i) step[static_cast<std::size_t>(i)] = -f[static_cast<std::size_t>(i)];
    solve_tridiagonal(lower, diag, upper, step);
  };

  for (int iter = 0; iter < max_iter; ++iter) {
    if (res < tol) {
      report.converged = true;
      break;
    }
    newton_step();

    double t = 1.0;
    bool accepted = false;
    for (int half = 0; half < kMaxHalvings; ++half) {
      RadialProfile trial = u;
      for (int i = 0; i < n; ++i) trial[i] += t * step[static_cast<std::size_t>(i)];
      int projections = 0;
      clamp_profile(trial, bp, &projections);
      residual_interior(trial, bp, nd, f_trial);
      const double res_trial = max_norm(f_trial);
      if (std::isfinite(res_trial) && res_trial <= (1.0 - kArmijo * t) * res) {
        u = std::move(trial);
        f.swap(f_trial);
        res = res_trial;
        report.bracket_projections += projections;
        if (t < 1.0) ++report.damping_events;
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    ++report.iterations;
    report.residual_history.push_back(res);
    if (!accepted) {
      std::ostringstream os;
      os << "solve_ball: line search stalled at iteration " << report.iterations
         << " with residual " << res << " (tol " << tol << ")";
      report.final_residual = res;
      throw convergence_error(os.str());
    }
  }

  if (!(res < tol)) {
    std::ostringstream os;
    os << "max-iter-exceeded: residual " << res << " after " << report.iterations
       << " Newton iterations (tol " << tol << ", "
       << report.damping_events << " damped steps, "
       << report.bracket_projections << " bracket projections)";
    report.final_residual = res;
    throw convergence_error(os.str());
  }
  report.converged = true;

  for (int s = 0; s < polish_steps; ++s) {
    newton_step();
    RadialProfile trial = u;
    for (int i = 0; i < n; ++i) trial[i] += step[static_cast<std::size_t>(i)];
    clamp_profile(trial, bp, nullptr);
    residual_interior(trial, bp, nd, f_trial);
    const double res_trial = max_norm(f_trial);
    if (!std::isfinite(res_trial) || res_trial > res) break;
    u = std::move(trial);
    f.swap(f_trial);
    res = res_trial;
    report.residual_history.push_back(res);
  }

  report.final_residual = res;

  // Exit assertions: the returned profile respects the bracket.
  for (int i = 0; i < bp.grid.node_count(); ++i) {
    if (i <= M && (u[i] < bp.bracket_low[i] || u[i] > bp.bracket_high[i])) {
      throw invariant_violation("solve_ball: converged profile escaped the bracket");
    }
  }
  return {std::move(u), std::move(report)};
}

}  // namespace efsolve
