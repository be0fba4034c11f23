#include "efsolve/potential.hpp"

#include <cmath>

namespace efsolve {

PotentialSpec PotentialSpec::from_expression(const std::string& source) {
  Expression e = Expression::parse(source);
  return PotentialSpec([e](double r) { return e.eval(r); }, source, true);
}

PotentialSpec PotentialSpec::constant(double value) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "builtin:constant:%.17g", value);
  return PotentialSpec([value](double) { return value; }, buf, true);
}

PotentialSpec PotentialSpec::power_decay(double alpha) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "builtin:power_decay:%.17g", alpha);
  return PotentialSpec([alpha](double r) { return std::pow(1.0 + r, -alpha); }, buf, true);
}

PotentialSpec PotentialSpec::gaussian(double beta) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "builtin:gaussian:%.17g", beta);
  return PotentialSpec([beta](double r) { return std::exp(-beta * r * r); }, buf, true);
}

PotentialSpec PotentialSpec::inverse_poly(double alpha) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "builtin:inverse_poly:%.17g", alpha);
  return PotentialSpec([alpha](double r) { return std::pow(1.0 + r * r, -alpha / 2.0); },
                       buf, true);
}

PotentialSpec PotentialSpec::from_callable(std::function<double(double)> fn,
                                           std::string label, bool radial) {
  return PotentialSpec(std::move(fn), std::move(label), radial);
}

const char* to_string(MajorantProfile::Provenance p) {
  switch (p) {
    case MajorantProfile::Provenance::kRadialP: return "radial-p";
    case MajorantProfile::Provenance::kUserSupplied: return "user-supplied";
    case MajorantProfile::Provenance::kSphereSampled: return "sphere-sampled";
  }
  return "?";
}

}  // namespace efsolve
