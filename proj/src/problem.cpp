#include "efsolve/problem.hpp"

#include <cmath>
#include <sstream>

#include "efsolve/errors.hpp"

namespace efsolve {

namespace {

std::vector<double> audit_grid(int points, double radius) {
  // r = 0 plus log-spaced points on [1e-6, radius]. Deterministic, so a
  // failing witness is reproducible.
  std::vector<double> rs;
  rs.reserve(static_cast<std::size_t>(points));
  rs.push_back(0.0);
  const double lo = std::log10(1e-6);
  const double hi = std::log10(radius);
  const int n = points - 1;
  for (int i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
    rs.push_back(std::pow(10.0, lo + t * (hi - lo)));
  }
  return rs;
}

}  // namespace

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].message;
  }
  return os.str();
}

ValidationReport validate_problem(const Problem& problem, int audit_points,
                                  double audit_radius) {
  ValidationReport report;
  if (problem.dimension < 3) {
    report.violations.push_back(
        {Violation::Code::kDimensionTooSmall,
         "dimension-too-small: N = " + std::to_string(problem.dimension) +
             " but N >= 3 is required",
         std::nullopt});
  }
  if (!(problem.gamma > 0.0)) {
    report.violations.push_back({Violation::Code::kNonpositiveExponent,
                                 "nonpositive-exponent: gamma must be > 0",
                                 std::nullopt});
  }
  if (!(problem.a > 0.0)) {
    report.violations.push_back({Violation::Code::kNonpositiveExponent,
                                 "nonpositive-exponent: a must be > 0",
                                 std::nullopt});
  }

  bool p_bad = false, q_bad = false, p_eval_bad = false, q_eval_bad = false;
  for (double r : audit_grid(audit_points, audit_radius)) {
    if (!p_bad && !p_eval_bad) {
      try {
        if (!(problem.p(r) > 0.0)) {
          char buf[96];
          std::snprintf(buf, sizeof buf,
                        "potential-sign-violation: p(r) <= 0 at r = %.6g", r);
          report.violations.push_back(
              {Violation::Code::kPotentialSignViolation, buf, r});
          p_bad = true;
        }
      } catch (const evaluation_error& e) {
        report.violations.push_back({Violation::Code::kEvaluationFailure,
                                     std::string("p: ") + e.what(), r});
        p_eval_bad = true;
      }
    }
    if (!q_bad && !q_eval_bad) {
      try {
        if (problem.q(r) < 0.0) {
          char buf[96];
          std::snprintf(buf, sizeof buf,
                        "potential-sign-violation: q(r) < 0 at r = %.6g", r);
          report.violations.push_back(
              {Violation::Code::kPotentialSignViolation, buf, r});
          q_bad = true;
        }
      } catch (const evaluation_error& e) {
        report.violations.push_back({Violation::Code::kEvaluationFailure,
                                     std::string("q: ") + e.what(), r});
        q_eval_bad = true;
      }
    }
  }
  return report;
}

MajorantProfile majorant(const Problem& problem) {
  if (problem.phi.has_value()) {
    const PotentialSpec phi = *problem.phi;
    return MajorantProfile{[phi](double r) { return phi(r); },
                           MajorantProfile::Provenance::kUserSupplied};
  }
  if (!problem.p.is_radial()) {
    throw invariant_violation(
        "unsupported-instance: p is not radial and no majorant phi was "
        "supplied; provide phi (a radial upper bound for p on each sphere)");
  }
  const PotentialSpec p = problem.p;
  return MajorantProfile{[p](double r) { return p(r); },
                         MajorantProfile::Provenance::kRadialP};
}

}  // namespace efsolve
