// SPDX-License-Identifier: Apache-2.0
//
// Core quantities of the rational curiosity model: saturating confidence
// growth with exposure, the expected value of current knowledge against a
// need distribution, and its exact derivative with respect to exposure.
// Everything here is a pure function of immutable values.
#pragma once

#include <cstddef>
#include <vector>

namespace curio {

/// Exponential confidence growth c(h) = 1 - exp(-rate * h).
/// rate = 1 is the canonical model; other rates stretch the exposure axis.
class GrowthModel {
 public:
  GrowthModel() = default;
  explicit GrowthModel(double rate);

  double rate() const { return rate_; }

  bool operator==(const GrowthModel&) const = default;

 private:
  double rate_ = 1.0;
};

/// Probability that each stimulus will be needed in the future.
/// Entries are non-negative and sum to 1 within 1e-9.
class NeedDistribution {
 public:
  explicit NeedDistribution(std::vector<double> probs);

  static NeedDistribution uniform(std::size_t n);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t k) const { return probs_[k]; }
  const std::vector<double>& probs() const { return probs_; }

  bool operator==(const NeedDistribution&) const = default;

 private:
  std::vector<double> probs_;
};

/// Accumulated exposure per stimulus. Exposure is a continuous non-negative
/// quantity; event counts are the integer special case.
class AgentState {
 public:
  /// Fresh state with zero exposure to every stimulus.
  explicit AgentState(std::size_t n) : exposures_(n, 0.0) {}
  explicit AgentState(std::vector<double> exposures);

  std::size_t size() const { return exposures_.size(); }
  double exposure(std::size_t k) const { return exposures_[k]; }
  const std::vector<double>& exposures() const { return exposures_; }

  void add_exposure(std::size_t k, double amount);

 private:
  std::vector<double> exposures_;
};

/// c = 1 - exp(-rate * h). Strictly increasing in h, always in [0, 1).
double confidence(const GrowthModel& model, double h);

/// V = sum_k p_k * c_k, the chance of responding correctly to the next
/// occurring stimulus. Bounded in [0, 1).
double knowledge_value(const NeedDistribution& p, const AgentState& state,
                       const GrowthModel& model);

/// dV/dh_k = p_k * rate * exp(-rate * h_k), the exact marginal gain in
/// knowledge value per unit exposure to stimulus k. This is the rational
/// curiosity score for k.
double marginal_value(const NeedDistribution& p, const AgentState& state,
                      const GrowthModel& model, std::size_t k);

}  // namespace curio
