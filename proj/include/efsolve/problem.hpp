#pragma once

#include <optional>
#include <string>
#include <vector>

#include "efsolve/potential.hpp"

namespace efsolve {

// One instance of  -Δu + q(x)|∇u|^a = p(x) u^(-γ)  on R^N with u -> 0 at
// infinity. p must be strictly positive and q nonnegative; N >= 3 and the
// exponents positive. phi optionally supplies the radial majorant when p is
// declared non-radial.
struct Problem {
  int dimension = 3;
  double gamma = 1.0;
  double a = 1.0;
  PotentialSpec p;
  PotentialSpec q;
  std::optional<PotentialSpec> phi;
};

struct Violation {
  enum class Code {
    kDimensionTooSmall,
    kNonpositiveExponent,
    kPotentialSignViolation,
    kEvaluationFailure,
  };
  Code code;
  std::string message;
  std::optional<double> witness_r;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

// Audits the standing assumptions on a deterministic grid: r = 0 plus
// audit_points logarithmically spaced values spanning [1e-6, audit_radius].
// p > 0 and q >= 0 are required at every audited radius.
ValidationReport validate_problem(const Problem& problem,
                                  int audit_points = 512,
                                  double audit_radius = 1e4);

// The majorant Φ(r) = max_{|x|=r} p(x). Radial p collapses the sphere max to
// p itself; a supplied phi wins over that. Throws invariant_violation for a
// non-radial p without a supplied phi.
MajorantProfile majorant(const Problem& problem);

}  // namespace efsolve
