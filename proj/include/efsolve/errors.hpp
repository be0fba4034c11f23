#pragma once

#include <stdexcept>
#include <string>

namespace efsolve {

// Base class for everything this library throws on purpose.
class solver_error : public std::runtime_error {
 public:
  explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed DSL input; position is a 0-based byte offset into the source.
class parse_error : public solver_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : solver_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Raised when an expression is evaluated outside its domain (log of a
// negative number, 0^-1, overflow to infinity, ...).
class evaluation_error : public solver_error {
 public:
  evaluation_error(const std::string& what, double r)
      : solver_error(what + " (at r = " + std::to_string(r) + ")"), r_(r) {}
  double at_r() const { return r_; }

 private:
  double r_;
};

class quadrature_error : public solver_error {
 public:
  using solver_error::solver_error;
};

// The two K quadrature routes disagreed beyond tolerance.
class cross_check_error : public solver_error {
 public:
  using solver_error::solver_error;
};

class invariant_violation : public solver_error {
 public:
  using solver_error::solver_error;
};

class convergence_error : public solver_error {
 public:
  using solver_error::solver_error;
};

class config_error : public solver_error {
 public:
  using solver_error::solver_error;
};

}  // namespace efsolve
