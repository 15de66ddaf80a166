#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "contact/expr/jet.hpp"

namespace contact {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Default numerical rank threshold, relative to max(1, largest singular value).
inline constexpr double kRankThreshold = 1e-8;

inline Vec to_vec(std::span<const double> v) {
  Vec out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

inline std::vector<double> to_std(const Vec& v) { return {v.data(), v.data() + v.size()}; }

inline Vec gradient_of(const expr::Jet& j, std::size_t dim) {
  Vec g(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) g(static_cast<Eigen::Index>(i)) = j.gradient(i);
  return g;
}

inline Mat hessian_of(const expr::Jet& j, std::size_t dim) {
  Mat h(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) h(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = j.hessian(a, b);
  return h;
}

inline Eigen::JacobiSVD<Mat> full_svd(const Mat& a) { return Eigen::JacobiSVD<Mat>(a, Eigen::ComputeFullU | Eigen::ComputeFullV); }

inline double rank_cutoff(const Vec& singular, double tol) {
  const double top = singular.size() ? singular(0) : 0.0;
  return tol * std::max(1.0, top);
}

inline std::size_t numerical_rank(const Mat& a, double tol = kRankThreshold) {
  if (a.size() == 0) return 0;
  const Eigen::JacobiSVD<Mat> svd(a);
  const Vec s = svd.singularValues();
  const double cut = rank_cutoff(s, tol);
  return static_cast<std::size_t>((s.array() > cut).count());
}

/// Orthonormal basis (columns) of the null space of `a`, which has `cols`
/// columns even when it has no rows.
inline Mat null_space(const Mat& a, Eigen::Index cols, double tol = kRankThreshold) {
  if (a.rows() == 0) return Mat::Identity(cols, cols);
  const auto svd = full_svd(a);
  const Vec s = svd.singularValues();
  const double cut = rank_cutoff(s, tol);
  const auto rank = static_cast<Eigen::Index>((s.array() > cut).count());
  return svd.matrixV().rightCols(cols - rank);
}

inline Mat symmetrize(const Mat& m) { return 0.5 * (m + m.transpose()); }

inline double min_symmetric_eigenvalue(const Mat& m) {
  if (m.size() == 0) return 0.0;
  const Eigen::SelfAdjointEigenSolver<Mat> solver(symmetrize(m), Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

inline double smallest_singular_value(const Mat& a) {
  if (a.size() == 0) return 0.0;
  const Eigen::JacobiSVD<Mat> svd(a);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

namespace detail {

inline double pfaffian_rec(const Mat& a, std::vector<Eigen::Index>& idx) {
  if (idx.empty()) return 1.0;
  const Eigen::Index first = idx.front();
  double sum = 0.0;
  for (std::size_t j = 1; j < idx.size(); ++j) {
    const double entry = a(first, idx[j]);
    if (entry == 0.0) continue;
    std::vector<Eigen::Index> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t k = 1; k < idx.size(); ++k)
      if (k != j) rest.push_back(idx[k]);
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    sum += sign * entry * pfaffian_rec(a, rest);
  }
  return sum;
}

}  // namespace detail

/// Pfaffian of the antisymmetric matrix restricted to rows/cols `idx`
/// (expansion along the first row; fine for the small sizes used here).
inline double pfaffian(const Mat& a, std::vector<Eigen::Index> idx) {
  if (idx.size() % 2 == 1) return 0.0;
  return detail::pfaffian_rec(a, idx);
}

inline double pfaffian(const Mat& a) {
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(a.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) idx[static_cast<std::size_t>(i)] = i;
  return pfaffian(a, idx);
}

}  // namespace contact
