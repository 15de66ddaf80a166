#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "contact/expr/ast.hpp"
#include "contact/expr/jet.hpp"

namespace contact::expr {

/// Raised when an expression is evaluated outside the domain of one of its
/// operations. `subexpression` is the serialized offending node.
class DomainError : public std::runtime_error {
 public:
  DomainError(const std::string& what, std::string subexpression)
      : std::runtime_error(what + " in '" + subexpression + "'"), subexpression_(std::move(subexpression)) {}
  const std::string& subexpression() const { return subexpression_; }

 private:
  std::string subexpression_;
};

namespace detail {

struct BumpDerivatives {
  double f0, f1, f2;
};

inline BumpDerivatives bump_derivatives(double t) {
  if (!(std::abs(t) < 1.0)) return {0.0, 0.0, 0.0};
  const double q = 1.0 - t * t;
  const double f0 = std::exp(-1.0 / q);
  if (f0 == 0.0) return {0.0, 0.0, 0.0};
  const double g1 = -2.0 * t / (q * q);
  const double g2 = -2.0 / (q * q) - 8.0 * t * t / (q * q * q);
  return {f0, f0 * g1, f0 * (g1 * g1 + g2)};
}

template <class Context>
[[noreturn]] inline void domain_failure(const Context& ctx, const Node& n, const char* what) {
  std::string text;
  serialize(n, *ctx.scope, text);
  throw DomainError(what, text);
}

struct ValueContext {
  const Scope* scope;
  std::span<const double> vars;
};

inline double eval_value(const Node& n, const ValueContext& ctx) {
  switch (n.op) {
    case Op::Number: return n.number;
    case Op::Variable: return ctx.vars[static_cast<std::size_t>(n.index)];
    case Op::Negate: return -eval_value(*n.lhs, ctx);
    case Op::Add: return eval_value(*n.lhs, ctx) + eval_value(*n.rhs, ctx);
    case Op::Subtract: return eval_value(*n.lhs, ctx) - eval_value(*n.rhs, ctx);
    case Op::Multiply: return eval_value(*n.lhs, ctx) * eval_value(*n.rhs, ctx);
    case Op::Divide: {
      const double a = eval_value(*n.lhs, ctx);
      const double b = eval_value(*n.rhs, ctx);
      if (b == 0.0) domain_failure(ctx, n, "division by zero");
      return a / b;
    }
    case Op::Power: {
      const double a = eval_value(*n.lhs, ctx);
      if (n.index < 0 && a == 0.0) domain_failure(ctx, n, "negative power of zero");
      return std::pow(a, n.index);
    }
    case Op::Call: {
      const double a = eval_value(*n.lhs, ctx);
      switch (n.function) {
        case Function::Sin: return std::sin(a);
        case Function::Cos: return std::cos(a);
        case Function::Tan:
          if (std::cos(a) == 0.0) domain_failure(ctx, n, "tan pole");
          return std::tan(a);
        case Function::Exp: return std::exp(a);
        case Function::Log:
          if (!(a > 0.0)) domain_failure(ctx, n, "log of non-positive value");
          return std::log(a);
        case Function::Sqrt:
          if (!(a > 0.0)) domain_failure(ctx, n, "sqrt of non-positive value");
          return std::sqrt(a);
        case Function::Abs:
          if (a == 0.0) domain_failure(ctx, n, "abs is not differentiable at 0");
          return std::abs(a);
        case Function::Bump: return bump_derivatives(a).f0;
      }
    }
  }
  return 0.0;
}

struct JetContext {
  const Scope* scope;
  std::span<const Jet> vars;
};

inline Jet eval_jet(const Node& n, const JetContext& ctx) {
  switch (n.op) {
    case Op::Number: {
      const std::size_t dim = ctx.vars.empty() ? 0 : ctx.vars.front().dim();
      return Jet::constant(n.number, dim);
    }
    case Op::Variable: return ctx.vars[static_cast<std::size_t>(n.index)];
    case Op::Negate: return -eval_jet(*n.lhs, ctx);
    case Op::Add: return eval_jet(*n.lhs, ctx) + eval_jet(*n.rhs, ctx);
    case Op::Subtract: return eval_jet(*n.lhs, ctx) - eval_jet(*n.rhs, ctx);
    case Op::Multiply: return eval_jet(*n.lhs, ctx) * eval_jet(*n.rhs, ctx);
    case Op::Divide: {
      const Jet a = eval_jet(*n.lhs, ctx);
      const Jet b = eval_jet(*n.rhs, ctx);
      const double v = b.value();
      if (v == 0.0) domain_failure(ctx, n, "division by zero");
      return a * b.apply(1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
    }
    case Op::Power: {
      const Jet a = eval_jet(*n.lhs, ctx);
      const double x = a.value();
      const int k = n.index;
      if (k < 0 && x == 0.0) domain_failure(ctx, n, "negative power of zero");
      if (k == 0) return a.apply(1.0, 0.0, 0.0);
      const double f0 = std::pow(x, k);
      const double f1 = k * std::pow(x, k - 1);
      const double f2 = k == 1 ? 0.0 : static_cast<double>(k) * (k - 1) * std::pow(x, k - 2);
      return a.apply(f0, f1, f2);
    }
    case Op::Call: {
      const Jet a = eval_jet(*n.lhs, ctx);
      const double x = a.value();
      switch (n.function) {
        case Function::Sin: return a.apply(std::sin(x), std::cos(x), -std::sin(x));
        case Function::Cos: return a.apply(std::cos(x), -std::sin(x), -std::cos(x));
        case Function::Tan: {
          const double c = std::cos(x);
          if (c == 0.0) domain_failure(ctx, n, "tan pole");
          const double t = std::tan(x);
          const double sec2 = 1.0 / (c * c);
          return a.apply(t, sec2, 2.0 * sec2 * t);
        }
        case Function::Exp: {
          const double e = std::exp(x);
          return a.apply(e, e, e);
        }
        case Function::Log:
          if (!(x > 0.0)) domain_failure(ctx, n, "log of non-positive value");
          return a.apply(std::log(x), 1.0 / x, -1.0 / (x * x));
        case Function::Sqrt: {
          if (!(x > 0.0)) domain_failure(ctx, n, "sqrt of non-positive value");
          const double s = std::sqrt(x);
          return a.apply(s, 0.5 / s, -0.25 / (s * x));
        }
        case Function::Abs:
          if (x == 0.0) domain_failure(ctx, n, "abs is not differentiable at 0");
          return x > 0.0 ? a : -a;
        case Function::Bump: {
          const auto d = bump_derivatives(x);
          return a.apply(d.f0, d.f1, d.f2);
        }
      }
    }
  }
  return {};
}

}  // namespace detail

inline double evaluate(const Expression& e, std::span<const double> point) {
  if (point.size() < e.arity()) throw std::invalid_argument("assignment does not cover the expression scope");
  return detail::eval_value(e.root(), {e.scope().get(), point});
}

/// Forward-mode evaluation where every scope variable is itself a jet over
/// some outer set of variables (chain rule through composition).
inline Jet evaluate_jet(const Expression& e, std::span<const Jet> inputs) {
  if (inputs.size() < e.arity()) throw std::invalid_argument("assignment does not cover the expression scope");
  return detail::eval_jet(e.root(), {e.scope().get(), inputs});
}

inline std::vector<Jet> seed_jets(std::span<const double> point) {
  std::vector<Jet> seeds;
  seeds.reserve(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) seeds.push_back(Jet::variable(point[i], i, point.size()));
  return seeds;
}

/// Value, gradient and hessian with respect to the scope variables.
inline Jet evaluate_jet(const Expression& e, std::span<const double> point) {
  const auto seeds = seed_jets(point.first(e.arity()));
  return evaluate_jet(e, std::span<const Jet>(seeds));
}

inline std::vector<double> evaluate_all(std::span<const Expression> es, std::span<const double> point) {
  std::vector<double> out;
  out.reserve(es.size());
  for (const auto& e : es) out.push_back(evaluate(e, point));
  return out;
}

inline std::vector<Jet> evaluate_all_jets(std::span<const Expression> es, std::span<const Jet> inputs) {
  std::vector<Jet> out;
  out.reserve(es.size());
  for (const auto& e : es) out.push_back(evaluate_jet(e, inputs));
  return out;
}

}  // namespace contact::expr
