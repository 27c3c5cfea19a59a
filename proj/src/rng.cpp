// SPDX-License-Identifier: Apache-2.0
#include "curio/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace curio {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::domain_error("Rng::below: bound must be positive");
  // Lemire multiply-shift with rejection of the biased slice.
  unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(next_u64()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double Rng::normal(double mean, double sd) {
  if (sd < 0.0) throw std::domain_error("Rng::normal: sd must be non-negative");
  const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
  const double u2 = uniform01();
  const double z = std::sqrt(-2.0 * std::log(u1)) *
                   std::cos(2.0 * std::numbers::pi * u2);
  return mean + sd * z;
}

double Rng::exponential(double mean) {
  if (mean <= 0.0) throw std::domain_error("Rng::exponential: mean must be positive");
  return -mean * std::log1p(-uniform01());
}

std::size_t Rng::categorical(std::span<const double> weights) {
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0 || !std::isfinite(w))
      throw std::domain_error("Rng::categorical: weights must be finite and non-negative");
    total += w;
  }
  if (total <= 0.0)
    throw std::domain_error("Rng::categorical: at least one weight must be positive");

  const double u = uniform01() * total;
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k] <= 0.0) continue;
    acc += weights[k];
    last_positive = k;
    if (u < acc) return k;
  }
  // Rounding slack at the top of the accumulated range.
  return last_positive;
}

std::vector<std::size_t> sample_without_replacement(std::span<const double> weights,
                                                    std::size_t count, Rng& rng) {
  if (count > weights.size())
    throw std::domain_error("sample_without_replacement: count exceeds population size");
  std::vector<double> remaining(weights.begin(), weights.end());
  std::vector<std::size_t> chosen;
  chosen.reserve(count);
  for (std::size_t draw = 0; draw < count; ++draw) {
    const std::size_t k = rng.categorical(remaining);
    chosen.push_back(k);
    remaining[k] = 0.0;
  }
  return chosen;
}

}  // namespace curio
