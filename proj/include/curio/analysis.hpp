// SPDX-License-Identifier: Apache-2.0
//
// Regression and binning pipeline for the experiment data: per-participant
// rating normalization, the quadratic confidence/uncertainty fit with
// permutation p-values, curve binning, and shape classification.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace curio {

/// z-scores each participant's ratings in place of raw 1-7 values so the
/// fit is not dominated by scale-use differences. Uses the sample standard
/// deviation; a zero-variance group maps to all zeros.
std::vector<std::vector<double>> normalize_curiosity(
    const std::vector<std::vector<double>>& groups);

/// Maps percent confidences onto [0, 1]. Values outside [0, 100] are
/// rejected.
std::vector<double> rescale_confidence(std::span<const double> percents);

struct RegressionFit {
  double intercept = 0.0;
  double coef_confidence = 0.0;   // slope on c
  double coef_uncertainty = 0.0;  // slope on c * (1 - c)
  double r = 0.0;                 // Pearson correlation of fitted vs observed
  double p_confidence = 1.0;      // two-sided permutation p-values
  double p_uncertainty = 1.0;
  std::size_t n_obs = 0;
};

/// Ordinary least squares of y on [1, c, c(1-c)], with permutation tests
/// for both slopes: each permutation shuffles a fresh copy of y under its
/// own derived stream and the p-value is (1 + #{|coef_perm| >= |coef_obs|})
/// / (permutations + 1). A collinear design (e.g. constant confidence)
/// raises DegenerateDesignError naming the offending column.
RegressionFit quadratic_fit(std::span<const double> y, std::span<const double> c,
                            std::size_t permutations, std::uint64_t seed);

struct BinnedCurve {
  std::vector<double> bin_centers;
  std::vector<double> means;  // NaN for empty bins
  std::vector<std::size_t> counts;
  double bin_width = 0.0;
};

/// Averages y within equal-width confidence bins over [0, 1]. Bins are
/// half-open except the last, which also takes c = 1.
BinnedCurve bin_curve(std::span<const double> c, std::span<const double> y,
                      double bin_width);

/// bin_curve over 0/1 reveal indicators, giving the empirical reveal rate
/// per confidence bin.
BinnedCurve bin_reveal_curve(const std::vector<bool>& revealed,
                             std::span<const double> c, double bin_width = 0.1);

enum class Shape { InvertedU, Decreasing, Flat, Other };

const char* to_string(Shape shape);

/// Reads the fitted curve's shape off the slopes: a significantly positive
/// uncertainty slope wins (inverted U), else a significantly negative
/// confidence slope (decreasing), else flat when neither slope is
/// significant.
Shape classify_shape(const RegressionFit& fit, double alpha = 0.05);

}  // namespace curio
