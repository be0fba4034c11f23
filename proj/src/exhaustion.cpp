#include "efsolve/exhaustion.hpp"

#include <cmath>
#include <sstream>

#include "efsolve/errors.hpp"

namespace efsolve {

namespace {

constexpr double kOrderingTol = 1e-10;

struct BallSetup {
  RadialGrid grid;
  BarrierData barrier;
  EigenPair eig;
  double epsilon = 0.0;
  BallProblem bp;
};

BallSetup prepare_ball(const Problem& problem, const MajorantProfile& phi,
                       const KResult& k, double radius,
                       const ExhaustionConfig& config) {
  BallSetup s;
  s.grid = RadialGrid::with_spacing(radius, config.h);
  s.barrier = compute_barrier(phi, problem.dimension, problem.gamma, s.grid, k);
  s.eig = first_eigenpair(s.grid, problem.dimension, config.eigen_tol);
  s.epsilon = choose_epsilon(problem, s.eig, s.grid);

  // The bracket needs eps*phi1 <= v nodewise; scaling eps down preserves the
  // subsolution inequality, which is re-asserted after the cap.
  double cap = INFINITY;
  for (int i = 0; i <= s.grid.M; ++i) {
    cap = std::min(cap, s.barrier.v_samples[i] / s.eig.phi1[i]);
  }
  if (s.epsilon > cap) {
    s.epsilon = cap * (1.0 - 0x1p-20);
    if (!subsolution_holds(problem, s.eig, s.grid, s.epsilon)) {
      throw invariant_violation(
          "exhaustion: capped epsilon no longer satisfies the subsolution "
          "inequality");
    }
  }

  s.bp.problem = problem;
  s.bp.grid = s.grid;
  s.bp.boundary_value = 0.0;
  s.bp.bracket_low = RadialProfile(s.grid);
  for (int i = 0; i < s.grid.node_count(); ++i) {
    s.bp.bracket_low[i] = s.epsilon * s.eig.phi1[i];
  }
  s.bp.bracket_high = s.barrier.v_samples;
  return s;
}

void check_preconditions(const Problem& problem, const ExhaustionConfig& config,
                         const MajorantProfile& phi) {
  config.validate();
  const ValidationReport vr = validate_problem(problem);
  if (!vr.ok()) {
    throw invariant_violation("solve_entire: invalid problem: " + vr.summary());
  }
  const IntegrabilityVerdict verdict =
      check_integrability(phi, config.integrability_tol);
  if (verdict.classification != IntegrabilityVerdict::Classification::kConvergent) {
    throw invariant_violation(
        std::string("solve_entire: decay integral is ") +
        to_string(verdict.classification) +
        "; the barrier construction does not apply");
  }
}

}  // namespace

std::vector<double> ExhaustionConfig::default_radii() {
  std::vector<double> rs;
  double r = 5.0;
  for (int i = 0; i < 8; ++i) {
    rs.push_back(r);
    r *= 2.0;
  }
  return rs;
}

void ExhaustionConfig::validate() const {
  if (radii.empty()) throw config_error("exhaustion: empty radius schedule");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0)) throw config_error("exhaustion: radii must be positive");
    if (i > 0 && !(radii[i] > radii[i - 1])) {
      throw config_error("exhaustion: radii must be strictly increasing");
    }
  }
  if (!(h > 0.0) || !(cauchy_tol > 0.0) || !(tail_tol > 0.0) ||
      !(newton_tol > 0.0) || !(eigen_tol > 0.0) || !(k_tol > 0.0) ||
      !(integrability_tol > 0.0)) {
    throw config_error("exhaustion: tolerances must be positive");
  }
  if (max_iter < 1) throw config_error("exhaustion: max_iter must be >= 1");
}

EntireSolution solve_entire(const Problem& problem, const ExhaustionConfig& config) {
  const MajorantProfile phi = majorant(problem);
  check_preconditions(problem, config, phi);
  const KResult k = compute_k(phi, problem.dimension, config.k_tol);

  EntireSolution out;
  out.K = k.k();

  const RadialGrid window_grid = RadialGrid::with_spacing(config.radii.front(), config.h);
  RadialProfile prev_window;
  bool have_prev = false;

  for (double radius : config.radii) {
    BallSetup s = prepare_ball(problem, phi, k, radius, config);
    out.c = s.barrier.c;

    auto [u, report] = solve_ball(s.bp, config.newton_tol, config.max_iter);

    // Barrier domination on the full ball grid.
    for (int i = 0; i < s.grid.node_count(); ++i) {
      if (u[i] > s.barrier.v_samples[i] + kOrderingTol) {
        std::ostringstream os;
        os << "monotonicity-violation: u(" << s.grid.r(i) << ") = " << u[i]
           << " exceeds the barrier v = " << s.barrier.v_samples[i]
           << " on the ball R = " << radius;
        throw invariant_violation(os.str());
      }
    }

    // Domain monotonicity on the comparison window.
    RadialProfile window(window_grid);
    for (int i = 0; i < window_grid.node_count(); ++i) {
      window[i] = u.interpolate(window_grid.r(i));
    }
    double gap = 0.0;
    if (have_prev) {
      for (int i = 0; i < window_grid.node_count(); ++i) {
        if (prev_window[i] > window[i] + kOrderingTol) {
          std::ostringstream os;
          os << "monotonicity-violation: u_k(" << window_grid.r(i) << ") = "
             << prev_window[i] << " > u_{k+1} = " << window[i]
             << " between R = " << out.radii_used.back() << " and R = " << radius;
          throw invariant_violation(os.str());
        }
        gap = std::max(gap, std::abs(window[i] - prev_window[i]));
      }
      out.successive_gaps.push_back(gap);
    }

    out.radii_used.push_back(radius);
    out.tail_value = s.barrier.v_samples[s.grid.M + 1];
    out.profile = std::move(u);
    out.barrier_v = s.barrier.v_samples;
    out.balls.push_back({radius, s.eig.lambda1, s.epsilon, std::move(report)});

    if (have_prev && gap < config.cauchy_tol && out.tail_value < config.tail_tol) {
      out.certified = true;
      break;
    }
    prev_window = std::move(window);
    have_prev = true;
  }
  return out;
}

ProbeReport uniqueness_probe(const Problem& problem, const ExhaustionConfig& config) {
  const EntireSolution run = solve_entire(problem, config);

  ProbeReport probe;
  probe.threshold = 10.0 * config.newton_tol;
  probe.radius = run.radii_used.back();
  if (!run.certified) {
    probe.applicable = false;  // probing a non-converged run says nothing
    return probe;
  }
  probe.applicable = true;

  const MajorantProfile phi = majorant(problem);
  const KResult k = compute_k(phi, problem.dimension, config.k_tol);
  BallSetup s = prepare_ball(problem, phi, k, probe.radius, config);

  RadialProfile midpoint(s.grid);
  for (int i = 0; i < s.grid.node_count(); ++i) {
    midpoint[i] = 0.5 * (s.bp.bracket_low[i] + s.bp.bracket_high[i]);
  }

  auto [u_super, rep_super] = solve_ball(s.bp, config.newton_tol, config.max_iter, 2);
  auto [u_mid, rep_mid] =
      solve_ball(s.bp, config.newton_tol, config.max_iter, 2, &midpoint);

  double m_hat = 0.0;
  for (int i = 0; i < s.grid.node_count(); ++i) {
    m_hat = std::max(m_hat, std::abs(u_super[i] - u_mid[i]));
  }
  probe.m_hat = m_hat;
  probe.passed = m_hat < probe.threshold;
  probe.from_supersolution = std::move(rep_super);
  probe.from_midpoint = std::move(rep_mid);
  return probe;
}

}  // namespace efsolve
