// SPDX-License-Identifier: Apache-2.0
#include "curio/environment.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "curio/errors.hpp"

namespace curio {

const char* to_string(CouplingMode mode) {
  switch (mode) {
    case CouplingMode::Independent: return "independent";
    case CouplingMode::ExposureCoupled: return "exposure_coupled";
    case CouplingMode::ConfidenceCoupled: return "confidence_coupled";
  }
  return "unknown";
}

CouplingMode parse_coupling_mode(const std::string& name) {
  if (name == "independent") return CouplingMode::Independent;
  if (name == "exposure_coupled") return CouplingMode::ExposureCoupled;
  if (name == "confidence_coupled") return CouplingMode::ConfidenceCoupled;
  throw ConfigError("unknown coupling mode '" + name +
                    "' (expected independent, exposure_coupled, or confidence_coupled)");
}

BaseDistribution BaseDistribution::uniform() { return BaseDistribution{}; }

BaseDistribution BaseDistribution::zipf(double exponent) {
  BaseDistribution base;
  base.kind = Kind::Zipf;
  base.zipf_exponent = exponent;
  return base;
}

BaseDistribution BaseDistribution::custom(std::vector<double> probs) {
  BaseDistribution base;
  base.kind = Kind::Custom;
  base.custom_probs = std::move(probs);
  return base;
}

void EnvironmentSpec::validate() const {
  if (n < 1) throw ConfigError("environment.n must be at least 1");
  if (!(smoothing >= 0.0) || !std::isfinite(smoothing))
    throw ConfigError("environment.smoothing must be finite and non-negative");
  switch (base.kind) {
    case BaseDistribution::Kind::Uniform:
      break;
    case BaseDistribution::Kind::Zipf:
      if (!(base.zipf_exponent >= 0.0) || !std::isfinite(base.zipf_exponent))
        throw ConfigError("environment.base.exponent must be finite and non-negative");
      break;
    case BaseDistribution::Kind::Custom:
      if (base.custom_probs.size() != n)
        throw ConfigError("environment.base.probs must have exactly n entries");
      // Entry validity is NeedDistribution's job; surface it as a config error.
      try {
        NeedDistribution check(base.custom_probs);
      } catch (const std::domain_error& e) {
        throw ConfigError(std::string("environment.base.probs invalid: ") + e.what());
      }
      break;
  }
}

NeedDistribution zipf_distribution(std::size_t n, double s) {
  if (n < 1) throw std::domain_error("zipf_distribution: n must be at least 1");
  if (!(s >= 0.0) || !std::isfinite(s))
    throw std::domain_error("zipf_distribution: exponent must be finite and non-negative");
  std::vector<double> weights(n);
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    weights[k] = std::pow(static_cast<double>(k + 1), -s);
    total += weights[k];
  }
  for (double& w : weights) w /= total;
  return NeedDistribution(std::move(weights));
}

NeedDistribution base_distribution(const EnvironmentSpec& spec) {
  spec.validate();
  switch (spec.base.kind) {
    case BaseDistribution::Kind::Uniform:
      return NeedDistribution::uniform(spec.n);
    case BaseDistribution::Kind::Zipf:
      return zipf_distribution(spec.n, spec.base.zipf_exponent);
    case BaseDistribution::Kind::Custom:
      return NeedDistribution(spec.base.custom_probs);
  }
  throw std::logic_error("base_distribution: unreachable");
}

namespace {

NeedDistribution normalize_weights(std::vector<double> weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  if (total <= 0.0) {
    // All weights vanish (zero state with zero smoothing): fall back to uniform.
    return NeedDistribution::uniform(weights.size());
  }
  for (double& w : weights) w /= total;
  return NeedDistribution(std::move(weights));
}

}  // namespace

NeedDistribution need_probabilities(const EnvironmentSpec& spec, const AgentState& state) {
  if (state.size() != spec.n)
    throw DimensionError("need_probabilities: state has " + std::to_string(state.size()) +
                         " stimuli but environment has " + std::to_string(spec.n));
  switch (spec.coupling) {
    case CouplingMode::Independent:
      return base_distribution(spec);
    case CouplingMode::ExposureCoupled: {
      std::vector<double> weights(spec.n);
      for (std::size_t k = 0; k < spec.n; ++k)
        weights[k] = state.exposure(k) + spec.smoothing;
      return normalize_weights(std::move(weights));
    }
    case CouplingMode::ConfidenceCoupled: {
      std::vector<double> weights(spec.n);
      for (std::size_t k = 0; k < spec.n; ++k)
        weights[k] = confidence(spec.growth, state.exposure(k)) + spec.smoothing;
      return normalize_weights(std::move(weights));
    }
  }
  throw std::logic_error("need_probabilities: unreachable");
}

std::size_t sample_stimulus(const NeedDistribution& p, Rng& rng) {
  return rng.categorical(p.probs());
}

}  // namespace curio
