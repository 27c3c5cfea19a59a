// SPDX-License-Identifier: Apache-2.0
#include "curio/analysis.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "curio/errors.hpp"
#include "curio/rng.hpp"

namespace curio {

std::vector<std::vector<double>> normalize_curiosity(
    const std::vector<std::vector<double>>& groups) {
  std::vector<std::vector<double>> normalized;
  normalized.reserve(groups.size());
  for (const std::vector<double>& group : groups) {
    if (group.empty()) throw std::domain_error("cannot normalize an empty rating group");
    double mean = 0.0;
    for (const double x : group) mean += x;
    mean /= static_cast<double>(group.size());
    double ss = 0.0;
    for (const double x : group) ss += (x - mean) * (x - mean);
    const double sd =
        group.size() > 1 ? std::sqrt(ss / static_cast<double>(group.size() - 1)) : 0.0;
    std::vector<double> z(group.size(), 0.0);
    if (sd > 0.0) {
      for (std::size_t i = 0; i < group.size(); ++i) z[i] = (group[i] - mean) / sd;
    }
    normalized.push_back(std::move(z));
  }
  return normalized;
}

std::vector<double> rescale_confidence(std::span<const double> percents) {
  std::vector<double> scaled;
  scaled.reserve(percents.size());
  for (const double p : percents) {
    if (!std::isfinite(p) || p < 0.0 || p > 100.0) {
      throw std::domain_error("percent confidence must lie in [0, 100]");
    }
    scaled.push_back(p / 100.0);
  }
  return scaled;
}

namespace {

constexpr std::array<const char*, 3> kColumnNames = {"intercept", "confidence",
                                                     "uncertainty"};

struct LuFactors {
  std::array<std::array<double, 3>, 3> lu{};
  std::array<std::size_t, 3> perm{};
};

// Partial-pivot LU of the 3x3 normal matrix. A vanishing pivot means the
// design column is a linear combination of the ones before it.
LuFactors factorize(std::array<std::array<double, 3>, 3> a) {
  double scale = 1.0;
  for (const auto& row : a) {
    for (const double v : row) scale = std::max(scale, std::abs(v));
  }
  const double tol = 1e-9 * scale;
  LuFactors f;
  f.perm = {0, 1, 2};
  for (std::size_t k = 0; k < 3; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < 3; ++i) {
      if (std::abs(a[i][k]) > std::abs(a[pivot][k])) pivot = i;
    }
    if (std::abs(a[pivot][k]) <= tol) {
      throw DegenerateDesignError(std::string("design matrix is rank deficient: column '") +
                                  kColumnNames[k] + "' is collinear");
    }
    std::swap(a[k], a[pivot]);
    std::swap(f.perm[k], f.perm[pivot]);
    for (std::size_t i = k + 1; i < 3; ++i) {
      a[i][k] /= a[k][k];
      for (std::size_t j = k + 1; j < 3; ++j) a[i][j] -= a[i][k] * a[k][j];
    }
  }
  f.lu = a;
  return f;
}

std::array<double, 3> solve(const LuFactors& f, const std::array<double, 3>& b) {
  std::array<double, 3> x{};
  for (std::size_t i = 0; i < 3; ++i) {
    x[i] = b[f.perm[i]];
    for (std::size_t j = 0; j < i; ++j) x[i] -= f.lu[i][j] * x[j];
  }
  for (std::size_t i = 3; i-- > 0;) {
    for (std::size_t j = i + 1; j < 3; ++j) x[i] -= f.lu[i][j] * x[j];
    x[i] /= f.lu[i][i];
  }
  return x;
}

double pearson(std::span<const double> a, std::span<const double> b) {
  const double n = static_cast<double>(a.size());
  double mean_a = 0.0;
  double mean_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mean_a += a[i];
    mean_b += b[i];
  }
  mean_a /= n;
  mean_b /= n;
  double cov = 0.0;
  double var_a = 0.0;
  double var_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    cov += (a[i] - mean_a) * (b[i] - mean_b);
    var_a += (a[i] - mean_a) * (a[i] - mean_a);
    var_b += (b[i] - mean_b) * (b[i] - mean_b);
  }
  if (var_a <= 0.0 || var_b <= 0.0) return 0.0;
  return cov / std::sqrt(var_a * var_b);
}

}  // namespace

RegressionFit quadratic_fit(std::span<const double> y, std::span<const double> c,
                            std::size_t permutations, std::uint64_t seed) {
  if (y.size() != c.size()) {
    throw DimensionError("response and confidence lengths differ");
  }
  if (y.size() < 3) throw std::domain_error("fit requires at least 3 observations");
  if (permutations < 1) throw std::domain_error("permutation count must be positive");
  for (const double ci : c) {
    if (!std::isfinite(ci) || ci < 0.0 || ci > 1.0) {
      throw std::domain_error("confidence must lie in [0, 1]");
    }
  }
  for (const double yi : y) {
    if (!std::isfinite(yi)) throw std::domain_error("response must be finite");
  }

  const std::size_t n = y.size();
  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = c[i] * (1.0 - c[i]);

  std::array<std::array<double, 3>, 3> xtx{};
  std::array<double, 3> xty{};
  for (std::size_t i = 0; i < n; ++i) {
    const std::array<double, 3> row = {1.0, c[i], u[i]};
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = 0; b < 3; ++b) xtx[a][b] += row[a] * row[b];
      xty[a] += row[a] * y[i];
    }
  }

  const LuFactors factors = factorize(xtx);
  const std::array<double, 3> beta = solve(factors, xty);

  RegressionFit fit;
  fit.intercept = beta[0];
  fit.coef_confidence = beta[1];
  fit.coef_uncertainty = beta[2];
  fit.n_obs = n;

  std::vector<double> fitted(n);
  for (std::size_t i = 0; i < n; ++i) fitted[i] = beta[0] + beta[1] * c[i] + beta[2] * u[i];
  fit.r = pearson(fitted, y);

  // The factored normal matrix is shared across permutations; only the
  // right-hand side changes with each shuffled response.
  std::size_t extreme_confidence = 0;
  std::size_t extreme_uncertainty = 0;
  std::vector<double> shuffled(y.begin(), y.end());
  for (std::size_t p = 0; p < permutations; ++p) {
    Rng rng(derive_seed(seed, p));
    shuffled.assign(y.begin(), y.end());
    rng.shuffle(shuffled);
    std::array<double, 3> rhs{};
    for (std::size_t i = 0; i < n; ++i) {
      rhs[0] += shuffled[i];
      rhs[1] += c[i] * shuffled[i];
      rhs[2] += u[i] * shuffled[i];
    }
    const std::array<double, 3> perm_beta = solve(factors, rhs);
    if (std::abs(perm_beta[1]) >= std::abs(beta[1])) ++extreme_confidence;
    if (std::abs(perm_beta[2]) >= std::abs(beta[2])) ++extreme_uncertainty;
  }
  const double denom = static_cast<double>(permutations + 1);
  fit.p_confidence = static_cast<double>(1 + extreme_confidence) / denom;
  fit.p_uncertainty = static_cast<double>(1 + extreme_uncertainty) / denom;
  return fit;
}

BinnedCurve bin_curve(std::span<const double> c, std::span<const double> y,
                      double bin_width) {
  if (c.size() != y.size()) throw DimensionError("confidence and value lengths differ");
  if (!(bin_width > 0.0) || bin_width > 1.0) {
    throw std::domain_error("bin width must lie in (0, 1]");
  }
  const auto nbins = static_cast<std::size_t>(std::ceil(1.0 / bin_width - 1e-9));
  BinnedCurve curve;
  curve.bin_width = bin_width;
  curve.bin_centers.resize(nbins);
  curve.counts.assign(nbins, 0);
  std::vector<double> sums(nbins, 0.0);
  for (std::size_t b = 0; b < nbins; ++b) {
    curve.bin_centers[b] = (static_cast<double>(b) + 0.5) * bin_width;
  }
  // The last bin is clipped to the [0, 1] domain, so its center is the
  // midpoint of what remains of it.
  curve.bin_centers[nbins - 1] =
      (static_cast<double>(nbins - 1) * bin_width + 1.0) / 2.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!std::isfinite(c[i]) || c[i] < 0.0 || c[i] > 1.0) {
      throw std::domain_error("confidence must lie in [0, 1]");
    }
    auto idx = static_cast<std::size_t>(c[i] / bin_width);
    if (idx >= nbins) idx = nbins - 1;
    // Division can land one bin off right at an edge; snap to the bin whose
    // boundaries actually contain the value.
    if (idx + 1 < nbins && c[i] >= static_cast<double>(idx + 1) * bin_width) ++idx;
    if (idx > 0 && c[i] < static_cast<double>(idx) * bin_width) --idx;
    sums[idx] += y[i];
    curve.counts[idx] += 1;
  }
  curve.means.resize(nbins);
  for (std::size_t b = 0; b < nbins; ++b) {
    curve.means[b] = curve.counts[b] > 0
                         ? sums[b] / static_cast<double>(curve.counts[b])
                         : std::numeric_limits<double>::quiet_NaN();
  }
  return curve;
}

BinnedCurve bin_reveal_curve(const std::vector<bool>& revealed,
                             std::span<const double> c, double bin_width) {
  std::vector<double> indicator(revealed.size());
  for (std::size_t i = 0; i < revealed.size(); ++i) indicator[i] = revealed[i] ? 1.0 : 0.0;
  return bin_curve(c, indicator, bin_width);
}

const char* to_string(Shape shape) {
  switch (shape) {
    case Shape::InvertedU: return "inverted_u";
    case Shape::Decreasing: return "decreasing";
    case Shape::Flat: return "flat";
    case Shape::Other: return "other";
  }
  throw std::logic_error("unreachable shape");
}

Shape classify_shape(const RegressionFit& fit, double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::domain_error("alpha must lie in (0, 1)");
  }
  const bool uncertainty_significant = fit.p_uncertainty < alpha;
  const bool confidence_significant = fit.p_confidence < alpha;
  if (fit.coef_uncertainty > 0.0 && uncertainty_significant) return Shape::InvertedU;
  if (fit.coef_confidence < 0.0 && confidence_significant) return Shape::Decreasing;
  if (!uncertainty_significant && !confidence_significant) return Shape::Flat;
  return Shape::Other;
}

}  // namespace curio
