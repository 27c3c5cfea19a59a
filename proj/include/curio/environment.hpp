// SPDX-License-Identifier: Apache-2.0
//
// Environment structure: how the need probability of each stimulus relates
// (or not) to the agent's exposure history, plus sampling of occurrences.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "curio/model.hpp"
#include "curio/rng.hpp"

namespace curio {

/// How need probabilities relate to the agent's history.
///   Independent       - fixed base distribution, untouched by exploration.
///   ExposureCoupled   - p_k tracks exposure: p_k = (h_k + eps) / sum.
///   ConfidenceCoupled - p_k tracks confidence: p_k = (c_k + eps) / sum.
enum class CouplingMode { Independent, ExposureCoupled, ConfidenceCoupled };

const char* to_string(CouplingMode mode);
CouplingMode parse_coupling_mode(const std::string& name);

/// Base need distribution used directly in Independent mode.
struct BaseDistribution {
  enum class Kind { Uniform, Zipf, Custom };

  Kind kind = Kind::Uniform;
  double zipf_exponent = 1.0;
  std::vector<double> custom_probs;

  static BaseDistribution uniform();
  static BaseDistribution zipf(double exponent);
  static BaseDistribution custom(std::vector<double> probs);

  bool operator==(const BaseDistribution&) const = default;
};

struct EnvironmentSpec {
  std::size_t n = 1;
  CouplingMode coupling = CouplingMode::Independent;
  BaseDistribution base;
  GrowthModel growth;
  double smoothing = 1e-6;

  /// Throws ConfigError on an inconsistent spec (n = 0, negative smoothing,
  /// custom base of the wrong length, ...).
  void validate() const;

  bool operator==(const EnvironmentSpec&) const = default;
};

/// Zipf distribution over n stimuli: p_k proportional to (k+1)^(-s).
/// s = 0 degenerates to uniform; negative s is rejected.
NeedDistribution zipf_distribution(std::size_t n, double s);

/// Resolves the spec's base distribution descriptor.
NeedDistribution base_distribution(const EnvironmentSpec& spec);

/// Current need probabilities given the agent's state. Independent mode
/// ignores the state entirely; coupled modes renormalize the smoothed
/// exposures or confidences, falling back to uniform if all weights vanish.
NeedDistribution need_probabilities(const EnvironmentSpec& spec, const AgentState& state);

/// Draws an occurring stimulus k with probability p_k.
std::size_t sample_stimulus(const NeedDistribution& p, Rng& rng);

}  // namespace curio
