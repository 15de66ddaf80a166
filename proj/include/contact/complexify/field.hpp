#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "contact/expr.hpp"

namespace contact::complexify {

using expr::Expression;
using expr::Jet;

/// Smooth scalar function on a family of charts, evaluated on jets so that
/// fields compose through coordinate maps with exact second derivatives.
/// Implementations are immutable and safe to evaluate concurrently.
class Field {
 public:
  virtual ~Field() = default;
  virtual Jet evaluate(std::size_t chart, std::span<const Jet> z) const = 0;

  Jet jet(std::size_t chart, std::span<const double> z) const {
    const auto seeds = expr::seed_jets(z);
    return evaluate(chart, seeds);
  }
  double value(std::size_t chart, std::span<const double> z) const { return jet(chart, z).value(); }
};

using FieldPtr = std::shared_ptr<const Field>;

/// One expression per chart; charts without an expression are an error.
class ExprField final : public Field {
 public:
  explicit ExprField(std::vector<Expression> per_chart) : exprs_(std::move(per_chart)) {}
  Jet evaluate(std::size_t chart, std::span<const Jet> z) const override {
    if (chart >= exprs_.size() || !exprs_[chart].valid()) throw std::out_of_range("field undefined on chart");
    return expr::evaluate_jet(exprs_[chart], z);
  }
  const Expression& expression(std::size_t chart) const { return exprs_.at(chart); }

 private:
  std::vector<Expression> exprs_;
};

class SumField final : public Field {
 public:
  explicit SumField(std::vector<std::pair<double, FieldPtr>> terms) : terms_(std::move(terms)) {}
  Jet evaluate(std::size_t chart, std::span<const Jet> z) const override {
    Jet sum = Jet::constant(0.0, z.empty() ? 0 : z.front().dim());
    for (const auto& [w, f] : terms_) {
      if (w == 0.0) continue;
      sum += w * f->evaluate(chart, z);
    }
    return sum;
  }

 private:
  std::vector<std::pair<double, FieldPtr>> terms_;
};

class ProductField final : public Field {
 public:
  ProductField(FieldPtr a, FieldPtr b) : a_(std::move(a)), b_(std::move(b)) {}
  Jet evaluate(std::size_t chart, std::span<const Jet> z) const override { return a_->evaluate(chart, z) * b_->evaluate(chart, z); }

 private:
  FieldPtr a_, b_;
};

/// Coordinate map from one outer chart into a chart of the inner field.
struct ChartMap {
  std::size_t target = 0;
  std::vector<Expression> map;  // in the outer chart's scope
};

/// inner ∘ F, where F is given per outer chart.
class PullbackField final : public Field {
 public:
  PullbackField(FieldPtr inner, std::vector<ChartMap> maps) : inner_(std::move(inner)), maps_(std::move(maps)) {}
  Jet evaluate(std::size_t chart, std::span<const Jet> z) const override {
    const auto& m = maps_.at(chart);
    const auto image = expr::evaluate_all_jets(m.map, z);
    return inner_->evaluate(m.target, image);
  }

 private:
  FieldPtr inner_;
  std::vector<ChartMap> maps_;
};

inline FieldPtr make_expr_field(std::vector<Expression> per_chart) { return std::make_shared<ExprField>(std::move(per_chart)); }
inline FieldPtr make_sum(std::vector<std::pair<double, FieldPtr>> terms) { return std::make_shared<SumField>(std::move(terms)); }
inline FieldPtr make_product(FieldPtr a, FieldPtr b) { return std::make_shared<ProductField>(std::move(a), std::move(b)); }
inline FieldPtr make_pullback(FieldPtr inner, std::vector<ChartMap> maps) {
  return std::make_shared<PullbackField>(std::move(inner), std::move(maps));
}

}  // namespace contact::complexify
