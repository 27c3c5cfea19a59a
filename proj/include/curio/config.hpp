// SPDX-License-Identifier: Apache-2.0
//
// Run configuration: a single JSON document with optional sections for the
// environment, simulation, experiment, and analysis settings. Unknown keys
// are rejected; missing keys take the documented defaults; the fully
// resolved configuration can be echoed back for reproducibility.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "curio/environment.hpp"
#include "curio/experiment.hpp"
#include "curio/policies.hpp"
#include "curio/simulation.hpp"

namespace curio {

struct AnalysisSettings {
  std::size_t permutations = 10000;
  double bin_width = 0.1;
  double alpha = 0.05;
  bool percent_confidence = false;  // inputs on the 0-100 scale

  void validate() const;

  bool operator==(const AnalysisSettings&) const = default;
};

struct RunConfig {
  std::uint64_t seed = 0;
  EnvironmentSpec environment;
  PolicyKind policy = PolicyKind::Rational;
  std::vector<PolicyKind> compare_policies = {
      PolicyKind::Rational, PolicyKind::Novelty, PolicyKind::InfoGap,
      PolicyKind::LearningProgress, PolicyKind::Random};
  std::size_t steps = 100;
  double exposure_increment = 1.0;
  std::size_t replications = 100;
  ExperimentConfig experiment;
  AnalysisSettings analysis;

  SimConfig simulation(PolicyKind which) const;
  SimConfig simulation() const { return simulation(policy); }
  ExperimentConfig experiment_config() const;

  bool operator==(const RunConfig&) const = default;
};

/// Parses and fully validates a configuration document. Unknown keys and
/// out-of-range values raise ConfigError naming the offending key.
RunConfig parse_run_config(const nlohmann::json& doc);

/// Reads and parses a configuration file. Unreadable files raise IoError;
/// malformed JSON and invalid values raise ConfigError.
RunConfig load_run_config(const std::string& path);

/// The configuration with every default filled in, suitable for echoing
/// into an output directory.
nlohmann::json resolved_config_json(const RunConfig& config);

}  // namespace curio
