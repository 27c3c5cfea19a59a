// SPDX-License-Identifier: Apache-2.0
#include "curio/policies.hpp"

#include <cmath>
#include <stdexcept>

#include "curio/errors.hpp"

namespace curio {

const char* to_string(PolicyKind policy) {
  switch (policy) {
    case PolicyKind::Rational: return "rational";
    case PolicyKind::Novelty: return "novelty";
    case PolicyKind::InfoGap: return "info_gap";
    case PolicyKind::LearningProgress: return "learning_progress";
    case PolicyKind::Random: return "random";
  }
  return "unknown";
}

PolicyKind parse_policy_kind(const std::string& name) {
  if (name == "rational") return PolicyKind::Rational;
  if (name == "novelty") return PolicyKind::Novelty;
  if (name == "info_gap") return PolicyKind::InfoGap;
  if (name == "learning_progress") return PolicyKind::LearningProgress;
  if (name == "random") return PolicyKind::Random;
  throw ConfigError("unknown policy '" + name +
                    "' (expected rational, novelty, info_gap, learning_progress, or random)");
}

CuriosityScores::CuriosityScores(std::vector<double> v) : values(std::move(v)) {
  for (double s : values) {
    if (!(s >= 0.0) || !std::isfinite(s))
      throw std::domain_error("CuriosityScores: scores must be finite and non-negative");
  }
}

namespace {

// -c ln(c), continuously extended to 0 at c = 0.
double entropy_term(double c) {
  return c > 0.0 ? -c * std::log(c) : 0.0;
}

}  // namespace

CuriosityScores score(PolicyKind policy, const NeedDistribution& p,
                      const AgentState& state, const GrowthModel& model) {
  if (p.size() != state.size())
    throw DimensionError("score: need distribution has " + std::to_string(p.size()) +
                         " entries but state has " + std::to_string(state.size()));
  const std::size_t n = state.size();
  std::vector<double> values(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double h = state.exposure(k);
    switch (policy) {
      case PolicyKind::Rational:
        values[k] = marginal_value(p, state, model, k);
        break;
      case PolicyKind::Novelty:
        values[k] = 1.0 - confidence(model, h);
        break;
      case PolicyKind::InfoGap:
        values[k] = entropy_term(confidence(model, h));
        break;
      case PolicyKind::LearningProgress:
        values[k] = h * std::exp(-model.rate() * h);
        break;
      case PolicyKind::Random:
        values[k] = 1.0;
        break;
    }
  }
  return CuriosityScores(std::move(values));
}

std::size_t select(const CuriosityScores& scores, Rng& rng) {
  if (scores.size() == 0)
    throw std::domain_error("select: scores must be non-empty");
  double best = scores[0];
  for (std::size_t k = 1; k < scores.size(); ++k)
    if (scores[k] > best) best = scores[k];
  std::vector<std::size_t> ties;
  for (std::size_t k = 0; k < scores.size(); ++k)
    if (scores[k] == best) ties.push_back(k);
  return ties[rng.below(ties.size())];
}

namespace {

double confidence_curve(PolicyKind policy, CouplingMode coupling, double c) {
  switch (policy) {
    case PolicyKind::Rational:
      switch (coupling) {
        case CouplingMode::Independent: return 1.0 - c;
        case CouplingMode::ExposureCoupled:
          return c < 1.0 ? -std::log(1.0 - c) * (1.0 - c) : 0.0;
        case CouplingMode::ConfidenceCoupled: return c * (1.0 - c);
      }
      break;
    case PolicyKind::Novelty: return 1.0 - c;
    case PolicyKind::InfoGap: return entropy_term(c);
    case PolicyKind::LearningProgress:
      return c < 1.0 ? -std::log(1.0 - c) * (1.0 - c) : 0.0;
    case PolicyKind::Random: return 1.0;
  }
  throw std::logic_error("confidence_curve: unreachable");
}

double exposure_curve(PolicyKind policy, CouplingMode coupling, double h,
                      const GrowthModel& model) {
  const double c = confidence(model, h);
  switch (policy) {
    case PolicyKind::Rational:
      switch (coupling) {
        case CouplingMode::Independent:
          return model.rate() * std::exp(-model.rate() * h);
        case CouplingMode::ExposureCoupled:
          return h * std::exp(-model.rate() * h);
        case CouplingMode::ConfidenceCoupled: return c * (1.0 - c);
      }
      break;
    case PolicyKind::Novelty: return 1.0 - c;
    case PolicyKind::InfoGap: return entropy_term(c);
    case PolicyKind::LearningProgress:
      return h * std::exp(-model.rate() * h);
    case PolicyKind::Random: return 1.0;
  }
  throw std::logic_error("exposure_curve: unreachable");
}

}  // namespace

std::vector<std::pair<double, double>> curiosity_vs_confidence(
    PolicyKind policy, CouplingMode coupling, std::span<const double> grid) {
  std::vector<std::pair<double, double>> curve;
  curve.reserve(grid.size());
  for (double c : grid) {
    if (!(c >= 0.0) || !(c < 1.0))
      throw std::domain_error("curiosity_vs_confidence: grid values must lie in [0, 1)");
    curve.emplace_back(c, confidence_curve(policy, coupling, c));
  }
  return curve;
}

std::vector<std::pair<double, double>> curiosity_vs_exposure(
    PolicyKind policy, CouplingMode coupling, std::span<const double> grid,
    const GrowthModel& model) {
  std::vector<std::pair<double, double>> curve;
  curve.reserve(grid.size());
  for (double h : grid) {
    if (!(h >= 0.0))
      throw std::domain_error("curiosity_vs_exposure: grid values must be non-negative");
    curve.emplace_back(h, exposure_curve(policy, coupling, h, model));
  }
  return curve;
}

}  // namespace curio
