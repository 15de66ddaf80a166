#pragma once

#include <algorithm>
#include <limits>
#include <span>
#include <vector>

#include "contact/reduction/kahler.hpp"

namespace contact::reduction {

struct KappaReport {
  std::size_t ker_dmu_min = std::numeric_limits<std::size_t>::max(), ker_dmu_max = 0;
  std::size_t complement_min = std::numeric_limits<std::size_t>::max(), complement_max = 0;
  std::size_t rank_min = std::numeric_limits<std::size_t>::max(), rank_max = 0;
  std::size_t expected_ker = 0, expected_complement = 0;
  double min_singular = std::numeric_limits<double>::infinity();  // of D(π∘ι) on the complement
  std::size_t samples = 0;

  /// Σ |dimension − expected| over the three dimensions, worst sample.
  double mismatch() const {
    const auto gap = [](std::size_t lo, std::size_t hi, std::size_t want) {
      return static_cast<double>(std::max(hi > want ? hi - want : 0, want > lo ? want - lo : 0));
    };
    return gap(ker_dmu_min, ker_dmu_max, expected_ker) + gap(complement_min, complement_max, expected_complement) +
           gap(rank_min, rank_max, expected_complement);
  }
};

/// At points x of μ⁻¹(0): dim ker dμ = 2n − k; the part of ker dμ that is
/// ω-orthogonal to the complexified orbit (ξ_a, Jξ_a) has dimension 2n − 2k;
/// the differential of the projection is injective on it.
inline KappaReport kappa_rank_check(const Field& rho, const Action& action, const KahlerReducedField& red,
                                    std::span<const std::vector<double>> q_samples, double threshold = kRankThreshold) {
  KappaReport r;
  const auto& hq = red.quotient();
  const auto basis = action.group().continuous() ? action.lie_basis() : std::vector<symmetry::Element>{};
  for (const auto& q : q_samples) {
    const auto x = red.level_point(q);
    const auto f = complexify::local_jet(rho, hq.chart, x);
    const auto dim = static_cast<Eigen::Index>(x.size());
    const Mat j = complexify::complex_structure(f.n);
    const Mat omega = complexify::kahler_form(f);
    const auto k = static_cast<Eigen::Index>(basis.size());
    Mat dmu(k, dim), rows(3 * k, dim);
    for (Eigen::Index a = 0; a < k; ++a) {
      const auto gen = action.generator(hq.chart, x, basis[static_cast<std::size_t>(a)], true);
      dmu.row(a) = (f.hess * (j * gen.value) + gen.jacobian.transpose() * (j.transpose() * f.grad)).transpose();
      rows.row(a) = dmu.row(a);
      rows.row(k + a) = (omega.transpose() * gen.value).transpose();
      rows.row(2 * k + a) = (omega.transpose() * (j * gen.value)).transpose();
    }
    const std::size_t ker = static_cast<std::size_t>(dim) - (k ? numerical_rank(dmu, threshold) : 0);
    const Mat complement = k ? null_space(rows, dim, threshold) : Mat(Mat::Identity(dim, dim));

    const auto seeds = expr::seed_jets(x);
    Mat dp(static_cast<Eigen::Index>(hq.projection.size()), dim);
    for (std::size_t a = 0; a < hq.projection.size(); ++a)
      dp.row(static_cast<Eigen::Index>(a)) = gradient_of(expr::evaluate_jet(hq.projection[a], std::span<const Jet>(seeds)), x.size()).transpose();
    const Mat image = dp * complement;
    const std::size_t rank = numerical_rank(image, threshold);
    if (image.cols() > 0) r.min_singular = std::min(r.min_singular, smallest_singular_value(image));

    const auto cdim = static_cast<std::size_t>(complement.cols());
    r.ker_dmu_min = std::min(r.ker_dmu_min, ker);
    r.ker_dmu_max = std::max(r.ker_dmu_max, ker);
    r.complement_min = std::min(r.complement_min, cdim);
    r.complement_max = std::max(r.complement_max, cdim);
    r.rank_min = std::min(r.rank_min, rank);
    r.rank_max = std::max(r.rank_max, rank);
    r.expected_ker = static_cast<std::size_t>(dim - k);
    r.expected_complement = static_cast<std::size_t>(dim - 2 * k);
    ++r.samples;
  }
  return r;
}

}  // namespace contact::reduction
