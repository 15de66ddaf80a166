#pragma once

#include <cmath>
#include <cstdio>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace contact::expr {

enum class Op { Number, Variable, Negate, Add, Subtract, Multiply, Divide, Power, Call };

/// bump(t) = exp(-1/(1-t^2)) on |t| < 1 and 0 elsewhere; the only
/// addition to the classical elementary functions, used by partitions of unity.
enum class Function { Sin, Cos, Tan, Exp, Log, Sqrt, Abs, Bump };

inline std::string_view function_name(Function f) {
  switch (f) {
    case Function::Sin: return "sin";
    case Function::Cos: return "cos";
    case Function::Tan: return "tan";
    case Function::Exp: return "exp";
    case Function::Log: return "log";
    case Function::Sqrt: return "sqrt";
    case Function::Abs: return "abs";
    case Function::Bump: return "bump";
  }
  return "?";
}

inline bool function_from_name(std::string_view name, Function& out) {
  static constexpr Function all[] = {Function::Sin,  Function::Cos, Function::Tan, Function::Exp,
                                     Function::Log,  Function::Sqrt, Function::Abs, Function::Bump};
  for (Function f : all)
    if (function_name(f) == name) {
      out = f;
      return true;
    }
  return false;
}

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  Op op = Op::Number;
  double number = 0.0;  // Number
  int index = 0;        // Variable index, or integer exponent for Power
  Function function = Function::Sin;
  NodePtr lhs;  // operand of unary ops and calls
  NodePtr rhs;
};

using Scope = std::vector<std::string>;
using ScopePtr = std::shared_ptr<const Scope>;

inline ScopePtr make_scope(Scope names) { return std::make_shared<const Scope>(std::move(names)); }

/// Immutable scalar expression over the variables of a scope. Copies share
/// structure; nothing is ever mutated after construction.
class Expression {
 public:
  Expression() = default;
  Expression(NodePtr root, ScopePtr scope) : root_(std::move(root)), scope_(std::move(scope)) {}

  const Node& root() const { return *root_; }
  const NodePtr& node() const { return root_; }
  const ScopePtr& scope() const { return scope_; }
  std::size_t arity() const { return scope_ ? scope_->size() : 0; }
  bool valid() const { return root_ != nullptr; }

  bool is_constant() const { return root_ && root_->op == Op::Number; }
  double constant_value() const { return root_->number; }

 private:
  NodePtr root_;
  ScopePtr scope_;
};

namespace detail {

inline NodePtr number_node(double v) {
  auto n = std::make_shared<Node>();
  n->op = Op::Number;
  n->number = v;
  return n;
}

inline NodePtr variable_node(int index) {
  auto n = std::make_shared<Node>();
  n->op = Op::Variable;
  n->index = index;
  return n;
}

inline NodePtr unary_node(Op op, NodePtr a) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = std::move(a);
  return n;
}

inline NodePtr binary_node(Op op, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

inline NodePtr power_node(NodePtr a, int exponent) {
  auto n = std::make_shared<Node>();
  n->op = Op::Power;
  n->index = exponent;
  n->lhs = std::move(a);
  return n;
}

inline NodePtr call_node(Function f, NodePtr a) {
  auto n = std::make_shared<Node>();
  n->op = Op::Call;
  n->function = f;
  n->lhs = std::move(a);
  return n;
}

inline bool is_number(const NodePtr& n, double v) { return n->op == Op::Number && n->number == v; }

// Builders with constant folding of the trivial cases. They are used for
// generated expressions (derivatives, substitutions); the parser builds raw
// nodes so parsed trees keep their written structure.
inline NodePtr add(NodePtr a, NodePtr b) {
  if (a->op == Op::Number && b->op == Op::Number) return number_node(a->number + b->number);
  if (is_number(a, 0.0)) return b;
  if (is_number(b, 0.0)) return a;
  return binary_node(Op::Add, std::move(a), std::move(b));
}

inline NodePtr negate(NodePtr a) {
  if (a->op == Op::Number) return number_node(-a->number);
  if (a->op == Op::Negate) return a->lhs;
  return unary_node(Op::Negate, std::move(a));
}

inline NodePtr subtract(NodePtr a, NodePtr b) {
  if (a->op == Op::Number && b->op == Op::Number) return number_node(a->number - b->number);
  if (is_number(b, 0.0)) return a;
  if (is_number(a, 0.0)) return negate(std::move(b));
  return binary_node(Op::Subtract, std::move(a), std::move(b));
}

inline NodePtr multiply(NodePtr a, NodePtr b) {
  if (a->op == Op::Number && b->op == Op::Number) return number_node(a->number * b->number);
  if (is_number(a, 0.0) || is_number(b, 0.0)) return number_node(0.0);
  if (is_number(a, 1.0)) return b;
  if (is_number(b, 1.0)) return a;
  return binary_node(Op::Multiply, std::move(a), std::move(b));
}

inline NodePtr divide(NodePtr a, NodePtr b) {
  if (is_number(a, 0.0)) return number_node(0.0);
  if (is_number(b, 1.0)) return a;
  if (a->op == Op::Number && b->op == Op::Number && b->number != 0.0)
    return number_node(a->number / b->number);
  return binary_node(Op::Divide, std::move(a), std::move(b));
}

inline NodePtr power(NodePtr a, int n) {
  if (n == 0) return number_node(1.0);
  if (n == 1) return a;
  if (a->op == Op::Number && (a->number != 0.0 || n > 0)) return number_node(std::pow(a->number, n));
  return power_node(std::move(a), n);
}

inline NodePtr call(Function f, NodePtr a) {
  if (a->op == Op::Number && f != Function::Bump) {
    const double x = a->number;
    switch (f) {
      case Function::Sin: return number_node(std::sin(x));
      case Function::Cos: return number_node(std::cos(x));
      case Function::Exp: return number_node(std::exp(x));
      default: break;
    }
  }
  return call_node(f, std::move(a));
}

inline void format_number(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

inline void serialize(const Node& n, const Scope& scope, std::string& out) {
  switch (n.op) {
    case Op::Number:
      if (n.number < 0.0 || (n.number == 0.0 && std::signbit(n.number))) {
        out += "(-";
        format_number(out, -n.number);
        out += ")";
      } else {
        format_number(out, n.number);
      }
      return;
    case Op::Variable: out += scope.at(static_cast<std::size_t>(n.index)); return;
    case Op::Negate:
      out += "(-";
      serialize(*n.lhs, scope, out);
      out += ")";
      return;
    case Op::Power:
      out += "(";
      serialize(*n.lhs, scope, out);
      out += " ^ ";
      out += std::to_string(n.index);
      out += ")";
      return;
    case Op::Call:
      out += function_name(n.function);
      out += "(";
      serialize(*n.lhs, scope, out);
      out += ")";
      return;
    default: break;
  }
  const char* sym = n.op == Op::Add ? " + " : n.op == Op::Subtract ? " - " : n.op == Op::Multiply ? " * " : " / ";
  out += "(";
  serialize(*n.lhs, scope, out);
  out += sym;
  serialize(*n.rhs, scope, out);
  out += ")";
}

inline bool structurally_equal(const Node& a, const Node& b) {
  if (a.op != b.op) return false;
  switch (a.op) {
    case Op::Number: return a.number == b.number;
    case Op::Variable: return a.index == b.index;
    case Op::Negate: return structurally_equal(*a.lhs, *b.lhs);
    case Op::Power: return a.index == b.index && structurally_equal(*a.lhs, *b.lhs);
    case Op::Call: return a.function == b.function && structurally_equal(*a.lhs, *b.lhs);
    default: return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
  }
}

inline NodePtr substitute(const NodePtr& n, const std::vector<NodePtr>& replacement) {
  switch (n->op) {
    case Op::Number: return n;
    case Op::Variable: return replacement.at(static_cast<std::size_t>(n->index));
    case Op::Negate: return negate(substitute(n->lhs, replacement));
    case Op::Power: return power(substitute(n->lhs, replacement), n->index);
    case Op::Call: return call(n->function, substitute(n->lhs, replacement));
    case Op::Add: return add(substitute(n->lhs, replacement), substitute(n->rhs, replacement));
    case Op::Subtract: return subtract(substitute(n->lhs, replacement), substitute(n->rhs, replacement));
    case Op::Multiply: return multiply(substitute(n->lhs, replacement), substitute(n->rhs, replacement));
    case Op::Divide: return divide(substitute(n->lhs, replacement), substitute(n->rhs, replacement));
  }
  return n;
}

inline NodePtr derivative(const NodePtr& n, int var) {
  const NodePtr& a = n->lhs;
  switch (n->op) {
    case Op::Number: return number_node(0.0);
    case Op::Variable: return number_node(n->index == var ? 1.0 : 0.0);
    case Op::Negate: return negate(derivative(a, var));
    case Op::Add: return add(derivative(a, var), derivative(n->rhs, var));
    case Op::Subtract: return subtract(derivative(a, var), derivative(n->rhs, var));
    case Op::Multiply:
      return add(multiply(derivative(a, var), n->rhs), multiply(a, derivative(n->rhs, var)));
    case Op::Divide: {
      NodePtr num = subtract(multiply(derivative(a, var), n->rhs), multiply(a, derivative(n->rhs, var)));
      return divide(num, power(n->rhs, 2));
    }
    case Op::Power:
      return multiply(multiply(number_node(n->index), power(a, n->index - 1)), derivative(a, var));
    case Op::Call: {
      NodePtr da = derivative(a, var);
      if (is_number(da, 0.0)) return da;
      switch (n->function) {
        case Function::Sin: return multiply(call(Function::Cos, a), da);
        case Function::Cos: return negate(multiply(call(Function::Sin, a), da));
        case Function::Tan: return divide(da, power(call(Function::Cos, a), 2));
        case Function::Exp: return multiply(n, da);
        case Function::Log: return divide(da, a);
        case Function::Sqrt: return divide(da, multiply(number_node(2.0), n));
        case Function::Abs: return divide(multiply(a, da), n);
        case Function::Bump:
          throw std::invalid_argument("symbolic derivative of bump() is not supported; use jets");
      }
    }
  }
  return number_node(0.0);
}

inline void collect_variables(const Node& n, std::vector<bool>& used) {
  if (n.op == Op::Variable) {
    used.at(static_cast<std::size_t>(n.index)) = true;
    return;
  }
  if (n.lhs) collect_variables(*n.lhs, used);
  if (n.rhs) collect_variables(*n.rhs, used);
}

inline std::size_t node_count(const Node& n) {
  return 1 + (n.lhs ? node_count(*n.lhs) : 0) + (n.rhs ? node_count(*n.rhs) : 0);
}

}  // namespace detail

inline std::string serialize(const Expression& e) {
  std::string out;
  detail::serialize(e.root(), *e.scope(), out);
  return out;
}

inline bool structurally_equal(const Expression& a, const Expression& b) {
  return detail::structurally_equal(a.root(), b.root());
}

inline Expression constant(const ScopePtr& scope, double v) { return {detail::number_node(v), scope}; }

inline Expression variable(const ScopePtr& scope, std::size_t index) {
  if (index >= scope->size()) throw std::out_of_range("variable index outside scope");
  return {detail::variable_node(static_cast<int>(index)), scope};
}

inline Expression variable(const ScopePtr& scope, std::string_view name) {
  for (std::size_t i = 0; i < scope->size(); ++i)
    if ((*scope)[i] == name) return variable(scope, i);
  throw std::invalid_argument("variable '" + std::string(name) + "' is not declared in scope");
}

namespace detail {
inline const ScopePtr& common_scope(const Expression& a, const Expression& b) {
  if (a.scope() != b.scope() && *a.scope() != *b.scope())
    throw std::invalid_argument("expressions combined across different scopes");
  return a.scope();
}
}  // namespace detail

inline Expression operator+(const Expression& a, const Expression& b) {
  return {detail::add(a.node(), b.node()), detail::common_scope(a, b)};
}
inline Expression operator-(const Expression& a, const Expression& b) {
  return {detail::subtract(a.node(), b.node()), detail::common_scope(a, b)};
}
inline Expression operator*(const Expression& a, const Expression& b) {
  return {detail::multiply(a.node(), b.node()), detail::common_scope(a, b)};
}
inline Expression operator/(const Expression& a, const Expression& b) {
  return {detail::divide(a.node(), b.node()), detail::common_scope(a, b)};
}
inline Expression operator-(const Expression& a) { return {detail::negate(a.node()), a.scope()}; }
inline Expression operator*(double s, const Expression& a) {
  return {detail::multiply(detail::number_node(s), a.node()), a.scope()};
}
inline Expression operator+(const Expression& a, double s) {
  return {detail::add(a.node(), detail::number_node(s)), a.scope()};
}
inline Expression pow(const Expression& a, int n) { return {detail::power(a.node(), n), a.scope()}; }
inline Expression apply(Function f, const Expression& a) { return {detail::call(f, a.node()), a.scope()}; }
inline Expression sin(const Expression& a) { return apply(Function::Sin, a); }
inline Expression cos(const Expression& a) { return apply(Function::Cos, a); }
inline Expression exp(const Expression& a) { return apply(Function::Exp, a); }
inline Expression bump(const Expression& a) { return apply(Function::Bump, a); }

/// Symbolic partial derivative. Trivial constant folding only; no rewriting.
inline Expression derivative(const Expression& e, std::size_t var) {
  return {detail::derivative(e.node(), static_cast<int>(var)), e.scope()};
}

/// Replaces every variable i of e by replacement[i]; all replacements must
/// share one scope, which becomes the scope of the result.
inline Expression substitute(const Expression& e, const std::vector<Expression>& replacement) {
  if (replacement.size() != e.arity())
    throw std::invalid_argument("substitution needs one expression per variable");
  if (replacement.empty()) return e;
  std::vector<NodePtr> nodes;
  nodes.reserve(replacement.size());
  for (const auto& r : replacement) nodes.push_back(r.node());
  return {detail::substitute(e.node(), nodes), replacement.front().scope()};
}

/// Re-expresses e over a larger scope whose names include every name of e's scope.
inline Expression rescope(const Expression& e, const ScopePtr& target) {
  std::vector<Expression> repl;
  repl.reserve(e.arity());
  for (const auto& name : *e.scope()) repl.push_back(variable(target, name));
  if (repl.empty()) return {e.node(), target};
  return substitute(e, repl);
}

inline std::vector<bool> used_variables(const Expression& e) {
  std::vector<bool> used(e.arity(), false);
  detail::collect_variables(e.root(), used);
  return used;
}

inline std::size_t node_count(const Expression& e) { return detail::node_count(e.root()); }

}  // namespace contact::expr
