#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace contact::expr {

/// Second-order forward-mode value: f, grad f and hess f with respect to a
/// fixed set of seed variables. The hessian is stored packed (upper triangle)
/// so it is symmetric by construction.
template <std::size_t Capacity>
class BasicJet {
 public:
  static constexpr std::size_t capacity = Capacity;
  static constexpr std::size_t packed_size = Capacity * (Capacity + 1) / 2;

  BasicJet() = default;

  static BasicJet constant(double v, std::size_t dim = 0) {
    check_dim(dim);
    BasicJet j;
    j.dim_ = dim;
    j.value_ = v;
    return j;
  }

  static BasicJet variable(double v, std::size_t index, std::size_t dim) {
    check_dim(dim);
    if (index >= dim) throw std::out_of_range("jet seed index out of range");
    BasicJet j;
    j.dim_ = dim;
    j.value_ = v;
    j.grad_[index] = 1.0;
    return j;
  }

  std::size_t dim() const { return dim_; }
  double value() const { return value_; }
  double gradient(std::size_t i) const { return grad_[i]; }
  double hessian(std::size_t i, std::size_t j) const { return hess_[packed(i, j)]; }

  void set_value(double v) { value_ = v; }
  void set_gradient(std::size_t i, double g) { grad_[i] = g; }
  /// Writes both (i,j) and (j,i) since storage is shared.
  void set_hessian(std::size_t i, std::size_t j, double h) { hess_[packed(i, j)] = h; }

  bool is_zero() const {
    if (value_ != 0.0) return false;
    for (std::size_t i = 0; i < dim_; ++i)
      if (grad_[i] != 0.0) return false;
    for (std::size_t k = 0; k < dim_ * (dim_ + 1) / 2; ++k)
      if (hess_[k] != 0.0) return false;
    return true;
  }

  bool is_finite() const {
    if (!std::isfinite(value_)) return false;
    for (std::size_t i = 0; i < dim_; ++i)
      if (!std::isfinite(grad_[i])) return false;
    for (std::size_t k = 0; k < dim_ * (dim_ + 1) / 2; ++k)
      if (!std::isfinite(hess_[k])) return false;
    return true;
  }

  /// Composition with a scalar function given its value and first two
  /// derivatives at value(): hess = f1 * H + f2 * g g^T.
  BasicJet apply(double f0, double f1, double f2) const {
    BasicJet r;
    r.dim_ = dim_;
    r.value_ = f0;
    for (std::size_t i = 0; i < dim_; ++i) r.grad_[i] = f1 * grad_[i];
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        r.hess_[packed(i, j)] = f1 * hess_[packed(i, j)] + f2 * grad_[i] * grad_[j];
    return r;
  }

  friend BasicJet operator+(const BasicJet& a, const BasicJet& b) {
    BasicJet r;
    r.dim_ = a.dim_ > b.dim_ ? a.dim_ : b.dim_;
    r.value_ = a.value_ + b.value_;
    for (std::size_t i = 0; i < r.dim_; ++i) r.grad_[i] = a.grad_[i] + b.grad_[i];
    for (std::size_t k = 0; k < r.dim_ * (r.dim_ + 1) / 2; ++k) r.hess_[k] = a.hess_[k] + b.hess_[k];
    return r;
  }

  friend BasicJet operator-(const BasicJet& a, const BasicJet& b) {
    BasicJet r;
    r.dim_ = a.dim_ > b.dim_ ? a.dim_ : b.dim_;
    r.value_ = a.value_ - b.value_;
    for (std::size_t i = 0; i < r.dim_; ++i) r.grad_[i] = a.grad_[i] - b.grad_[i];
    for (std::size_t k = 0; k < r.dim_ * (r.dim_ + 1) / 2; ++k) r.hess_[k] = a.hess_[k] - b.hess_[k];
    return r;
  }

  friend BasicJet operator-(const BasicJet& a) {
    BasicJet r = a;
    r.value_ = -r.value_;
    for (std::size_t i = 0; i < r.dim_; ++i) r.grad_[i] = -r.grad_[i];
    for (std::size_t k = 0; k < r.dim_ * (r.dim_ + 1) / 2; ++k) r.hess_[k] = -r.hess_[k];
    return r;
  }

  friend BasicJet operator*(const BasicJet& a, const BasicJet& b) {
    BasicJet r;
    r.dim_ = a.dim_ > b.dim_ ? a.dim_ : b.dim_;
    r.value_ = a.value_ * b.value_;
    for (std::size_t i = 0; i < r.dim_; ++i) r.grad_[i] = a.value_ * b.grad_[i] + b.value_ * a.grad_[i];
    for (std::size_t j = 0; j < r.dim_; ++j)
      for (std::size_t i = 0; i <= j; ++i) {
        const std::size_t k = packed(i, j);
        r.hess_[k] = a.value_ * b.hess_[k] + b.value_ * a.hess_[k] + a.grad_[i] * b.grad_[j] +
                     b.grad_[i] * a.grad_[j];
      }
    return r;
  }

  friend BasicJet operator*(double s, const BasicJet& a) {
    BasicJet r = a;
    r.value_ *= s;
    for (std::size_t i = 0; i < r.dim_; ++i) r.grad_[i] *= s;
    for (std::size_t k = 0; k < r.dim_ * (r.dim_ + 1) / 2; ++k) r.hess_[k] *= s;
    return r;
  }

  BasicJet& operator+=(const BasicJet& b) { return *this = *this + b; }

 private:
  static constexpr std::size_t packed(std::size_t i, std::size_t j) {
    return i <= j ? j * (j + 1) / 2 + i : i * (i + 1) / 2 + j;
  }

  static void check_dim(std::size_t dim) {
    if (dim > Capacity) throw std::length_error("jet dimension exceeds capacity");
  }

  std::size_t dim_ = 0;
  double value_ = 0.0;
  std::array<double, Capacity> grad_{};
  std::array<double, packed_size> hess_{};
};

/// Enough for the largest tube used by the toolkit (symplectified 3-manifolds
/// give 8 real coordinates) plus a few auxiliary parameters.
using Jet = BasicJet<12>;

}  // namespace contact::expr
