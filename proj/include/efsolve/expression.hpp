#pragma once

#include <memory>
#include <string>

#include "efsolve/errors.hpp"

namespace efsolve {

// A compiled arithmetic expression in the single radial variable r.
//
// Grammar (precedence climbing, loosest to tightest):
//   expr   := term  (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' unary)?          // right-associative, binds tighter
//                                        // than unary minus: -r^2 == -(r^2)
//   atom   := number | 'r' | ident '(' expr ')' | '(' expr ')'
// with ident one of exp, log, sqrt. Numbers are ordinary decimal literals
// (optionally with an exponent part).
//
// Compiled expressions are immutable; evaluation is pure and re-entrant, so
// one Expression may be shared across threads.
class Expression {
 public:
  struct Node;

  // Throws parse_error (with a 0-based byte offset) on malformed input.
  static Expression parse(const std::string& source);

  // Evaluates at the given radius. Throws evaluation_error when an operation
  // leaves the domain (log of a nonpositive value, division by zero, a
  // fractional power of a negative base, overflow to infinity).
  double eval(double r) const;

  // Fully parenthesized rendering; parse(pretty_print()) reproduces the same
  // tree and therefore bit-identical evaluations.
  std::string pretty_print() const;

  const std::string& source() const { return source_; }

 private:
  Expression(std::shared_ptr<const Node> root, std::string source)
      : root_(std::move(root)), source_(std::move(source)) {}

  std::shared_ptr<const Node> root_;
  std::string source_;
};

}  // namespace efsolve
