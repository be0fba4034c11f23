#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "efsolve/expression.hpp"

namespace efsolve {

// A radial potential: an evaluable map r >= 0 -> double, together with the
// source it was compiled from. Immutable after construction and safe to
// evaluate concurrently.
class PotentialSpec {
 public:
  // Default-constructed specs are unset and throw on evaluation.
  PotentialSpec() : source_("unset"), radial_(true) {}

  // Compile a DSL expression over the variable r.
  static PotentialSpec from_expression(const std::string& source);

  // Builtin families.
  static PotentialSpec constant(double value);
  static PotentialSpec power_decay(double alpha);    // (1+r)^(-alpha)
  static PotentialSpec gaussian(double beta);        // exp(-beta*r^2)
  static PotentialSpec inverse_poly(double alpha);   // (1+r^2)^(-alpha/2)

  // Escape hatch for callers with potentials outside the DSL (e.g. the
  // radial majorant of a genuinely non-radial p, sampled elsewhere). Such a
  // spec may be declared non-radial, which makes majorant() demand an
  // explicit phi.
  static PotentialSpec from_callable(std::function<double(double)> fn,
                                     std::string label, bool radial = true);

  double operator()(double r) const { return eval_(r); }

  // Source text: the DSL string, a "builtin:..." tag, or the callable label.
  const std::string& source() const { return source_; }
  bool is_radial() const { return radial_; }

 private:
  PotentialSpec(std::function<double(double)> eval, std::string source, bool radial)
      : eval_(std::move(eval)), source_(std::move(source)), radial_(radial) {}

  std::function<double(double)> eval_;
  std::string source_;
  bool radial_;
};

// The radial majorant of p: phi(r) >= p(x) whenever |x| = r.
struct MajorantProfile {
  enum class Provenance { kRadialP, kUserSupplied, kSphereSampled };

  std::function<double(double)> phi;
  Provenance provenance = Provenance::kRadialP;

  double operator()(double r) const { return phi(r); }
};

const char* to_string(MajorantProfile::Provenance p);

}  // namespace efsolve
