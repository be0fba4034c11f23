#include "efsolve/expression.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace efsolve {

namespace {

enum class NodeKind { kNumber, kVarR, kNegate, kBinary, kCall };

enum class BinOp { kAdd, kSub, kMul, kDiv, kPow };

enum class Fn { kExp, kLog, kSqrt };

}  // namespace

struct Expression::Node {
  NodeKind kind;
  double value = 0.0;                      // kNumber
  BinOp op = BinOp::kAdd;                  // kBinary
  Fn fn = Fn::kExp;                        // kCall
  std::shared_ptr<const Node> lhs, rhs;    // kBinary: both; kNegate/kCall: lhs
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;

NodePtr make_number(double v) {
  auto n = std::make_shared<Expression::Node>();
  n->kind = NodeKind::kNumber;
  n->value = v;
  return n;
}

NodePtr make_var() {
  auto n = std::make_shared<Expression::Node>();
  n->kind = NodeKind::kVarR;
  return n;
}

NodePtr make_neg(NodePtr arg) {
  auto n = std::make_shared<Expression::Node>();
  n->kind = NodeKind::kNegate;
  n->lhs = std::move(arg);
  return n;
}

NodePtr make_bin(BinOp op, NodePtr lhs, NodePtr rhs) {
  auto n = std::make_shared<Expression::Node>();
  n->kind = NodeKind::kBinary;
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

NodePtr make_call(Fn fn, NodePtr arg) {
  auto n = std::make_shared<Expression::Node>();
  n->kind = NodeKind::kCall;
  n->fn = fn;
  n->lhs = std::move(arg);
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : src_(src) {}

  NodePtr run() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != src_.size()) {
      throw parse_error("unexpected input", pos_);
    }
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (consume('+')) {
        lhs = make_bin(BinOp::kAdd, lhs, term());
      } else if (consume('-')) {
        lhs = make_bin(BinOp::kSub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (consume('*')) {
        lhs = make_bin(BinOp::kMul, lhs, unary());
      } else if (consume('/')) {
        lhs = make_bin(BinOp::kDiv, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (consume('-')) {
      return make_neg(unary());
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (consume('^')) {
      // Right-associative; the exponent may carry its own unary minus.
      return make_bin(BinOp::kPow, base, unary());
    }
    return base;
  }

  NodePtr atom() {
    skip_ws();
    if (pos_ >= src_.size()) {
      throw parse_error("expected operand", pos_);
    }
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      if (!consume(')')) {
        throw parse_error("expected ')'", pos_);
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return number();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      return identifier();
    }
    throw parse_error("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  NodePtr number() {
    const char* begin = src_.c_str() + pos_;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || !std::isfinite(v)) {
      throw parse_error("malformed number", pos_);
    }
    pos_ += static_cast<std::size_t>(end - begin);
    return make_number(v);
  }

  NodePtr identifier() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    std::string name = src_.substr(start, pos_ - start);
    if (name == "r") {
      return make_var();
    }
    Fn fn;
    if (name == "exp") {
      fn = Fn::kExp;
    } else if (name == "log") {
      fn = Fn::kLog;
    } else if (name == "sqrt") {
      fn = Fn::kSqrt;
    } else {
      throw parse_error("unknown identifier '" + name + "'", start);
    }
    if (!consume('(')) {
      throw parse_error("expected '(' after '" + name + "'", pos_);
    }
    NodePtr arg = expr();
    if (!consume(')')) {
      throw parse_error("expected ')'", pos_);
    }
    return make_call(fn, arg);
  }

  const std::string& src_;
  std::size_t pos_ = 0;
};

double eval_node(const Expression::Node& n, double r) {
  switch (n.kind) {
    case NodeKind::kNumber:
      return n.value;
    case NodeKind::kVarR:
      return r;
    case NodeKind::kNegate:
      return -eval_node(*n.lhs, r);
    case NodeKind::kBinary: {
      double a = eval_node(*n.lhs, r);
      double b = eval_node(*n.rhs, r);
      double out;
      switch (n.op) {
        case BinOp::kAdd: out = a + b; break;
        case BinOp::kSub: out = a - b; break;
        case BinOp::kMul: out = a * b; break;
        case BinOp::kDiv:
          if (b == 0.0) throw evaluation_error("division by zero", r);
          out = a / b;
          break;
        case BinOp::kPow:
          if (a < 0.0 && b != std::floor(b)) {
            throw evaluation_error("fractional power of a negative base", r);
          }
          if (a == 0.0 && b < 0.0) {
            throw evaluation_error("zero raised to a negative power", r);
          }
          out = std::pow(a, b);
          break;
      }
      if (!std::isfinite(out)) throw evaluation_error("nonfinite result", r);
      return out;
    }
    case NodeKind::kCall: {
      double a = eval_node(*n.lhs, r);
      double out;
      switch (n.fn) {
        case Fn::kExp: out = std::exp(a); break;
        case Fn::kLog:
          if (a <= 0.0) throw evaluation_error("log of a nonpositive value", r);
          out = std::log(a);
          break;
        case Fn::kSqrt:
          if (a < 0.0) throw evaluation_error("sqrt of a negative value", r);
          out = std::sqrt(a);
          break;
      }
      if (!std::isfinite(out)) throw evaluation_error("nonfinite result", r);
      return out;
    }
  }
  throw evaluation_error("corrupt expression node", r);
}

void print_node(const Expression::Node& n, std::ostream& os) {
  switch (n.kind) {
    case NodeKind::kNumber: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", n.value);
      os << buf;
      return;
    }
    case NodeKind::kVarR:
      os << 'r';
      return;
    case NodeKind::kNegate:
      os << "(-";
      print_node(*n.lhs, os);
      os << ')';
      return;
    case NodeKind::kBinary: {
      static const char* ops[] = {"+", "-", "*", "/", "^"};
      os << '(';
      print_node(*n.lhs, os);
      os << ops[static_cast<int>(n.op)];
      print_node(*n.rhs, os);
      os << ')';
      return;
    }
    case NodeKind::kCall: {
      static const char* fns[] = {"exp", "log", "sqrt"};
      os << fns[static_cast<int>(n.fn)] << '(';
      print_node(*n.lhs, os);
      os << ')';
      return;
    }
  }
}

}  // namespace

Expression Expression::parse(const std::string& source) {
  if (source.empty()) {
    throw parse_error("empty expression", 0);
  }
  Parser p(source);
  return Expression(p.run(), source);
}

double Expression::eval(double r) const { return eval_node(*root_, r); }

std::string Expression::pretty_print() const {
  std::ostringstream os;
  print_node(*root_, os);
  return os.str();
}

}  // namespace efsolve
