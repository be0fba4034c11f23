#pragma once

#include <optional>
#include <set>
#include <string>

#include "efsolve/exhaustion.hpp"
#include "efsolve/problem.hpp"

namespace efsolve {

// A run configuration as read from the sectioned key=value file:
//
//   [problem]
//   N = 3
//   gamma = 1
//   a = 2
//   p = "(1+r^2)^(-2)"     # DSL string (quotes optional) or a bare number
//   q = "0"
//   # phi = ...            # optional explicit majorant
//
//   [solver]               # all keys optional, defaults below
//   h = 0.01
//   radii = 5,10,20,40,80,160,320,640
//   cauchy_tol = 0.005
//   tail_tol = 0.5
//   newton_tol = 1e-9
//   max_iter = 50
//   eigen_tol = 1e-12
//   k_tol = 1e-7
//   integrability_tol = 1e-5
//
//   [output]
//   dir = out
//   formats = csv,json     # any of csv, json, svg
//
// '#' starts a comment; unknown keys are errors (strict mode).
struct RunConfig {
  // [problem] (potential sources kept verbatim so saving round-trips)
  int dimension = 3;
  double gamma = 1.0;
  double a = 1.0;
  std::string p_source;
  std::string q_source;
  std::optional<std::string> phi_source;

  // [solver]
  ExhaustionConfig solver;

  // [output]
  std::string output_dir = "out";
  std::set<std::string> formats = {"csv", "json"};

  Problem to_problem() const;

  bool operator==(const RunConfig& other) const;
};

// Parses the file at path. Throws config_error with a line number on parse
// errors, unknown keys, or missing required keys (N, gamma, a, p, q).
RunConfig load_config(const std::string& path);

// Parses config text directly (load_config is this plus the file read).
RunConfig parse_config(const std::string& text);

// Writes the config in the same format; load(save(x)) == x.
void save_config(const RunConfig& config, const std::string& path);
std::string format_config(const RunConfig& config);

}  // namespace efsolve
