// SPDX-License-Identifier: Apache-2.0
#include "curio/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "curio/errors.hpp"

namespace curio {

namespace {
constexpr double kSumTolerance = 1e-9;
}

GrowthModel::GrowthModel(double rate) : rate_(rate) {
  if (!(rate > 0.0) || !std::isfinite(rate))
    throw std::domain_error("GrowthModel: rate must be positive, got " +
                            std::to_string(rate));
}

NeedDistribution::NeedDistribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty())
    throw std::domain_error("NeedDistribution: must have at least one entry");
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || !std::isfinite(p))
      throw std::domain_error("NeedDistribution: entries must be finite and non-negative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSumTolerance)
    throw std::domain_error("NeedDistribution: entries sum to " +
                            std::to_string(sum) + ", expected 1");
}

NeedDistribution NeedDistribution::uniform(std::size_t n) {
  if (n == 0) throw std::domain_error("NeedDistribution::uniform: n must be positive");
  return NeedDistribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

AgentState::AgentState(std::vector<double> exposures)
    : exposures_(std::move(exposures)) {
  for (double h : exposures_) {
    if (!(h >= 0.0) || !std::isfinite(h))
      throw std::domain_error("AgentState: exposures must be finite and non-negative");
  }
}

void AgentState::add_exposure(std::size_t k, double amount) {
  if (k >= exposures_.size())
    throw std::out_of_range("AgentState::add_exposure: index out of range");
  if (!(amount > 0.0) || !std::isfinite(amount))
    throw std::domain_error("AgentState::add_exposure: amount must be positive");
  exposures_[k] += amount;
}

double confidence(const GrowthModel& model, double h) {
  if (!(h >= 0.0) || !std::isfinite(h))
    throw std::domain_error("confidence: exposure must be finite and non-negative");
  return 1.0 - std::exp(-model.rate() * h);
}

double knowledge_value(const NeedDistribution& p, const AgentState& state,
                       const GrowthModel& model) {
  if (p.size() != state.size())
    throw DimensionError("knowledge_value: need distribution has " +
                         std::to_string(p.size()) + " entries but state has " +
                         std::to_string(state.size()));
  double value = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k)
    value += p[k] * confidence(model, state.exposure(k));
  return value;
}

double marginal_value(const NeedDistribution& p, const AgentState& state,
                      const GrowthModel& model, std::size_t k) {
  if (p.size() != state.size())
    throw DimensionError("marginal_value: need distribution has " +
                         std::to_string(p.size()) + " entries but state has " +
                         std::to_string(state.size()));
  if (k >= p.size())
    throw std::out_of_range("marginal_value: stimulus index out of range");
  return p[k] * model.rate() * std::exp(-model.rate() * state.exposure(k));
}

}  // namespace curio
