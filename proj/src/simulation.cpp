// SPDX-License-Identifier: Apache-2.0
#include "curio/simulation.hpp"

#include <cmath>
#include <string>

#include "curio/csv.hpp"
#include "curio/errors.hpp"

namespace curio {

void SimConfig::validate() const {
  env.validate();
  if (steps < 1) throw ConfigError("simulation.steps must be at least 1");
  if (!(exposure_increment > 0.0) || !std::isfinite(exposure_increment))
    throw ConfigError("simulation.exposure_increment must be positive");
}

Trajectory run(const SimConfig& config) {
  config.validate();
  Rng rng(config.seed);
  AgentState state(config.env.n);
  const GrowthModel& growth = config.env.growth;

  Trajectory trajectory;
  trajectory.config = config;
  trajectory.records.reserve(config.steps);

  for (std::size_t step = 0; step < config.steps; ++step) {
    const NeedDistribution p = need_probabilities(config.env, state);
    const CuriosityScores scores = score(config.policy, p, state, growth);
    const std::size_t chosen = select(scores, rng);
    state.add_exposure(chosen, config.exposure_increment);

    const std::size_t occurred = sample_stimulus(p, rng);
    const double c = confidence(growth, state.exposure(occurred));
    const int reward = rng.bernoulli(c) ? 1 : 0;
    const double value = knowledge_value(p, state, growth);

    trajectory.records.push_back({step, chosen, occurred, reward, value});
    trajectory.cumulative_reward += reward;
  }
  return trajectory;
}

std::vector<PolicySummary> compare(std::span<const SimConfig> configs,
                                   std::size_t replications) {
  if (configs.empty()) throw ConfigError("compare: at least one config required");
  if (replications < 2) throw ConfigError("compare: replications must be at least 2");
  for (const SimConfig& config : configs) {
    config.validate();
    if (!(config.env == configs[0].env) || config.steps != configs[0].steps ||
        config.exposure_increment != configs[0].exposure_increment)
      throw ConfigError("compare: configs must differ only in policy and seed");
  }

  std::vector<PolicySummary> summaries;
  summaries.reserve(configs.size());
  for (const SimConfig& config : configs) {
    std::vector<double> rewards(replications);
    for (std::size_t r = 0; r < replications; ++r) {
      SimConfig replicate = config;
      replicate.seed = config.seed + r;
      rewards[r] = static_cast<double>(run(replicate).cumulative_reward);
    }
    double mean = 0.0;
    for (double x : rewards) mean += x;
    mean /= static_cast<double>(replications);
    double ss = 0.0;
    for (double x : rewards) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / static_cast<double>(replications - 1));
    summaries.push_back({config.policy, replications, mean, sd});
  }
  return summaries;
}

void write_trajectory_csv(const Trajectory& trajectory, std::ostream& out) {
  write_row(out, {"step", "chosen", "occurred", "reward", "knowledge_value"});
  for (const StepRecord& rec : trajectory.records) {
    write_row(out, {std::to_string(rec.step), std::to_string(rec.chosen),
                    std::to_string(rec.occurred), std::to_string(rec.reward),
                    format_double(rec.knowledge_value)});
  }
}

}  // namespace curio
