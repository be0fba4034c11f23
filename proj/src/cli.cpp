#include "efsolve/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <future>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "efsolve/barrier.hpp"
#include "efsolve/config.hpp"
#include "efsolve/errors.hpp"
#include "efsolve/exhaustion.hpp"
#include "efsolve/io.hpp"
#include "efsolve/verify.hpp"

namespace efsolve {

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kNegative = 2;  // the math said no, the program worked

std::string short_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

int cmd_check(const RunConfig& cfg) {
  const Problem problem = cfg.to_problem();
  const ValidationReport vr = validate_problem(problem);
  if (!vr.ok()) {
    std::cerr << "invalid problem: " << vr.summary() << "\n";
    return kError;
  }
  const MajorantProfile phi = majorant(problem);
  const IntegrabilityVerdict verdict =
      check_integrability(phi, cfg.solver.integrability_tol);
  std::cout << to_string(verdict.classification)
            << " integral_estimate=" << format_double(verdict.value_estimate)
            << " truncation_radius=" << short_double(verdict.tail_bound_used)
            << " provenance=" << to_string(phi.provenance) << "\n";
  return verdict.classification == IntegrabilityVerdict::Classification::kConvergent
             ? kOk
             : kNegative;
}

int cmd_barrier(const RunConfig& cfg, double radius) {
  const Problem problem = cfg.to_problem();
  const ValidationReport vr = validate_problem(problem);
  if (!vr.ok()) {
    std::cerr << "invalid problem: " << vr.summary() << "\n";
    return kError;
  }
  const MajorantProfile phi = majorant(problem);
  const IntegrabilityVerdict verdict =
      check_integrability(phi, cfg.solver.integrability_tol);
  if (verdict.classification != IntegrabilityVerdict::Classification::kConvergent) {
    std::cout << "decay integral " << to_string(verdict.classification)
              << "; no barrier exists\n";
    return kNegative;
  }
  const KResult k = compute_k(phi, problem.dimension, cfg.solver.k_tol);
  const RadialGrid grid = RadialGrid::with_spacing(radius, cfg.solver.h);
  const BarrierData barrier = compute_barrier(phi, problem.dimension, problem.gamma,
                                              grid, k);
  const SupersolutionReport margins =
      verify_supersolution(barrier, phi, grid, problem.dimension);

  std::cout << "K_double=" << format_double(k.k_double)
            << " K_reduced=" << format_double(k.k_reduced)
            << " c=" << format_double(barrier.c) << "\n";
  std::cout << margins.message << "\n";
  if (cfg.formats.count("csv")) {
    const std::string path = cfg.output_dir + "/barrier.csv";
    write_file(path, barrier_csv(barrier, margins, grid));
    std::cout << "wrote " << path << "\n";
  }
  return margins.passed ? kOk : kNegative;
}

int cmd_eigen(const RunConfig& cfg, double radius) {
  const RadialGrid grid = RadialGrid::with_spacing(radius, cfg.solver.h);
  const EigenPair eig = first_eigenpair(grid, cfg.dimension, cfg.solver.eigen_tol);
  std::cout << "lambda1=" << format_double(eig.lambda1) << " R=" << short_double(radius)
            << " M=" << grid.M << "\n";
  if (cfg.formats.count("csv")) {
    const std::string path = cfg.output_dir + "/eigen.csv";
    write_file(path, eigen_csv(eig));
    std::cout << "wrote " << path << "\n";
  }
  return kOk;
}

struct SolveOutcome {
  int code = kError;
  std::string summary;
};

SolveOutcome run_one_solve(RunConfig cfg, const std::string& suffix) {
  SolveOutcome out;
  const Problem problem = cfg.to_problem();
  const ValidationReport vr = validate_problem(problem);
  if (!vr.ok()) {
    out.summary = "invalid problem: " + vr.summary();
    return out;
  }
  const MajorantProfile phi = majorant(problem);
  const IntegrabilityVerdict verdict =
      check_integrability(phi, cfg.solver.integrability_tol);
  if (verdict.classification != IntegrabilityVerdict::Classification::kConvergent) {
    out.code = kNegative;
    out.summary = std::string("decay integral ") + to_string(verdict.classification) +
                  "; refusing to solve (no barrier exists)";
    return out;
  }
  const KResult k = compute_k(phi, problem.dimension, cfg.solver.k_tol);
  const EntireSolution entire = solve_entire(problem, cfg.solver);

  std::ostringstream files;
  if (cfg.formats.count("csv")) {
    const std::string path = cfg.output_dir + "/solution" + suffix + ".csv";
    write_file(path, solution_csv(entire.profile, entire.barrier_v));
    files << " " << path;
  }
  if (cfg.formats.count("json")) {
    const std::string path = cfg.output_dir + "/report" + suffix + ".json";
    write_file(path, solve_report_json(cfg, verdict, k, entire).dump(2) + "\n");
    files << " " << path;
  }
  if (cfg.formats.count("svg")) {
    const std::string path = cfg.output_dir + "/plot" + suffix + ".svg";
    write_file(path, solution_svg(entire.profile, entire.barrier_v));
    files << " " << path;
  }

  std::ostringstream os;
  os << (entire.certified ? "certified" : "uncertified")
     << " R_final=" << short_double(entire.radii_used.back())
     << " gap=" << (entire.successive_gaps.empty()
                        ? std::string("n/a")
                        : short_double(entire.successive_gaps.back()))
     << " tail_v=" << short_double(entire.tail_value)
     << " K=" << short_double(entire.K) << " c=" << short_double(entire.c);
  if (!files.str().empty()) os << " wrote" << files.str();
  out.summary = os.str();
  out.code = entire.certified ? kOk : kNegative;
  return out;
}

int cmd_solve(const RunConfig& cfg, const std::string& sweep) {
  if (sweep.empty()) {
    const SolveOutcome out = run_one_solve(cfg, "");
    std::cout << out.summary << "\n";
    return out.code;
  }

  // --sweep "gamma=0.5,1,2;a=1,2": cartesian fan-out, concurrent solves,
  // per-combo output files.
  std::vector<double> gammas{cfg.gamma};
  std::vector<double> as{cfg.a};
  std::stringstream ss(sweep);
  std::string part;
  while (std::getline(ss, part, ';')) {
    const std::size_t eq = part.find('=');
    if (eq == std::string::npos) {
      throw config_error("--sweep expects gamma=...;a=... lists");
    }
    const std::string key = part.substr(0, eq);
    std::vector<double> vals;
    std::stringstream vs(part.substr(eq + 1));
    std::string item;
    while (std::getline(vs, item, ',')) {
      vals.push_back(std::strtod(item.c_str(), nullptr));
    }
    if (vals.empty()) throw config_error("--sweep: empty list for " + key);
    if (key == "gamma") {
      gammas = vals;
    } else if (key == "a") {
      as = vals;
    } else {
      throw config_error("--sweep: unknown parameter '" + key + "'");
    }
  }

  struct Task {
    std::string name;
    std::future<SolveOutcome> future;
  };
  std::vector<Task> tasks;
  for (double g : gammas) {
    for (double a : as) {
      RunConfig combo = cfg;
      combo.gamma = g;
      combo.a = a;
      const std::string suffix = "_gamma" + short_double(g) + "_a" + short_double(a);
      tasks.push_back({suffix.substr(1),
                       std::async(std::launch::async, run_one_solve, combo, suffix)});
    }
  }
  int worst = kOk;
  for (auto& t : tasks) {
    const SolveOutcome out = t.future.get();
    std::cout << t.name << ": " << out.summary << "\n";
    worst = std::max(worst, out.code);
  }
  return worst;
}

int cmd_verify(double radius, double h) {
  bool all_ok = true;
  for (const ManufacturedCase& mc :
       {manufactured_no_gradient(), manufactured_gradient()}) {
    const ConvergenceOrder co = observed_order(mc, radius, h, 1e-9);
    const bool ok = co.order >= 1.7;
    all_ok = all_ok && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << mc.description
              << ": error(h=" << short_double(h) << ")=" << short_double(co.error_coarse)
              << " error(h/2)=" << short_double(co.error_fine)
              << " observed_order=" << short_double(co.order) << "\n";
  }
  return all_ok ? kOk : kNegative;
}

int cmd_probe(const RunConfig& cfg) {
  const Problem problem = cfg.to_problem();
  const ProbeReport probe = uniqueness_probe(problem, cfg.solver);
  if (!probe.applicable) {
    std::cout << "not-applicable (run did not certify)\n";
    return kNegative;
  }
  std::cout << (probe.passed ? "agree" : "DISAGREE")
            << " m_hat=" << format_double(probe.m_hat)
            << " threshold=" << format_double(probe.threshold)
            << " R=" << short_double(probe.radius) << "\n";
  if (cfg.formats.count("json")) {
    const std::string path = cfg.output_dir + "/probe.json";
    write_file(path, to_json(probe).dump(2) + "\n");
    std::cout << "wrote " << path << "\n";
  }
  return probe.passed ? kOk : kNegative;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "Positive entire solutions of -Δu + q(r)|∇u|^a = p(r) u^(-γ) decaying "
      "to zero, by sub/supersolution bracketing and exhaustion over balls"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir_override;
  double radius = 0.0;
  std::string sweep;
  double verify_radius = 20.0;
  double verify_h = 0.02;

  auto add_config = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("-c,--config", config_path,
                                "run configuration file (sectioned key=value)");
    if (required) opt->required();
    sub->add_option("-o,--out", out_dir_override,
                    "output directory (overrides [output] dir)");
  };

  auto* check = app.add_subcommand(
      "check", "classify the decay integral of r*Phi(r) and print its value");
  add_config(check);

  auto* barrier = app.add_subcommand(
      "barrier", "compute K and c, sample w and v, verify the supersolution "
                 "inequality, and export the profiles");
  add_config(barrier);
  barrier->add_option("-R,--radius", radius, "ball radius for the sampled profiles");

  auto* eigen = app.add_subcommand(
      "eigen", "first Dirichlet eigenpair of -Δ on a ball");
  add_config(eigen);
  eigen->add_option("-R,--radius", radius, "ball radius")->required();

  auto* solve = app.add_subcommand(
      "solve", "run the full exhaustion and emit the entire solution");
  add_config(solve);
  solve->add_option("--sweep", sweep,
                    "fan out over parameter lists, e.g. \"gamma=0.5,1,2;a=1,2\"");

  auto* verify = app.add_subcommand(
      "verify", "manufactured-solution self-test; prints the observed "
                "convergence order");
  verify->add_option("-R,--radius", verify_radius, "ball radius (default 20)");
  verify->add_option("--h", verify_h, "coarse grid spacing (default 0.02)");

  auto* probe = app.add_subcommand(
      "probe", "uniqueness probe: final-ball solves from two initializations");
  add_config(probe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) {
      cfg = load_config(config_path);
      if (!out_dir_override.empty()) cfg.output_dir = out_dir_override;
    }
    if (check->parsed()) return cmd_check(cfg);
    if (barrier->parsed()) {
      const double r = radius > 0.0 ? radius : cfg.solver.radii.front();
      return cmd_barrier(cfg, r);
    }
    if (eigen->parsed()) return cmd_eigen(cfg, radius);
    if (solve->parsed()) return cmd_solve(cfg, sweep);
    if (verify->parsed()) return cmd_verify(verify_radius, verify_h);
    if (probe->parsed()) return cmd_probe(cfg);
  } catch (const solver_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace efsolve
