// SPDX-License-Identifier: Apache-2.0
//
// The explore-then-test loop. Each step the agent explores the stimulus its
// policy is most curious about, then nature samples an occurring stimulus
// from the need distribution and the agent earns a reward if it responds
// correctly (with probability equal to its confidence).
#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "curio/environment.hpp"
#include "curio/policies.hpp"

namespace curio {

struct SimConfig {
  EnvironmentSpec env;
  PolicyKind policy = PolicyKind::Rational;
  std::size_t steps = 100;
  double exposure_increment = 1.0;
  std::uint64_t seed = 0;

  void validate() const;
};

struct StepRecord {
  std::size_t step;
  std::size_t chosen;    // stimulus the agent explored
  std::size_t occurred;  // stimulus nature sampled
  int reward;            // 1 if the agent responded correctly
  double knowledge_value;
};

struct Trajectory {
  SimConfig config;
  std::vector<StepRecord> records;
  long long cumulative_reward = 0;
};

/// Runs one episode. Identical configs (including seed) produce identical
/// trajectories, byte for byte in serialized form.
Trajectory run(const SimConfig& config);

struct PolicySummary {
  PolicyKind policy;
  std::size_t replications;
  double mean_cumulative_reward;
  double stddev_cumulative_reward;  // sample standard deviation
};

/// Benchmarks policies against each other in a shared environment. Each
/// config is replicated with seeds seed, seed+1, ... and its cumulative
/// rewards aggregated. Configs may differ only in policy and seed.
std::vector<PolicySummary> compare(std::span<const SimConfig> configs,
                                   std::size_t replications);

/// CSV with header step,chosen,occurred,reward,knowledge_value.
void write_trajectory_csv(const Trajectory& trajectory, std::ostream& out);

}  // namespace curio
