// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "curio/environment.hpp"
#include "curio/errors.hpp"
#include "curio/model.hpp"
#include "curio/simulation.hpp"

using namespace curio;

namespace {

SimConfig single_stimulus_config(PolicyKind policy, std::size_t steps,
                                 std::uint64_t seed) {
  SimConfig config;
  config.env.n = 1;
  config.policy = policy;
  config.steps = steps;
  config.seed = seed;
  return config;
}

// Replays the recorded trajectory against the documented step order:
// p from the pre-step state, exposure bump on the chosen stimulus, V from
// the pre-step needs and the bumped state.
void check_replay(const Trajectory& trajectory) {
  AgentState state(trajectory.config.env.n);
  for (const StepRecord& record : trajectory.records) {
    const NeedDistribution p = need_probabilities(trajectory.config.env, state);
    state.add_exposure(record.chosen, trajectory.config.exposure_increment);
    const double v = knowledge_value(p, state, trajectory.config.env.growth);
    CHECK(record.knowledge_value == doctest::Approx(v).epsilon(1e-12));
  }
}

}  // namespace

TEST_CASE("single-stimulus run follows the closed form") {
  for (const PolicyKind policy : {PolicyKind::Rational, PolicyKind::Random}) {
    const Trajectory trajectory = run(single_stimulus_config(policy, 3, 7));
    REQUIRE(trajectory.records.size() == 3);
    const std::array<double, 3> expected = {0.6321205588285577, 0.8646647167633873,
                                            0.950212931632136};
    for (std::size_t t = 0; t < 3; ++t) {
      CHECK(trajectory.records[t].chosen == 0);
      CHECK(trajectory.records[t].occurred == 0);
      CHECK(trajectory.records[t].knowledge_value ==
            doctest::Approx(expected[t]).epsilon(1e-9));
    }
  }
}

TEST_CASE("identical configs give byte-identical trajectories") {
  SimConfig config;
  config.env.n = 6;
  config.env.coupling = CouplingMode::ExposureCoupled;
  config.policy = PolicyKind::InfoGap;
  config.steps = 120;
  config.seed = 99;
  const Trajectory a = run(config);
  const Trajectory b = run(config);
  std::ostringstream csv_a;
  std::ostringstream csv_b;
  write_trajectory_csv(a, csv_a);
  write_trajectory_csv(b, csv_b);
  CHECK(csv_a.str() == csv_b.str());
  CHECK(csv_a.str().substr(0, csv_a.str().find('\n')) ==
        "step,chosen,occurred,reward,knowledge_value");
}

TEST_CASE("cumulative reward is the sum of step rewards within bounds") {
  SimConfig config;
  config.env.n = 8;
  config.env.base = BaseDistribution::zipf(1.0);
  config.steps = 300;
  config.seed = 5;
  const Trajectory trajectory = run(config);
  long long total = 0;
  for (const StepRecord& record : trajectory.records) {
    REQUIRE(record.reward >= 0);
    REQUIRE(record.reward <= 1);
    REQUIRE(record.chosen < config.env.n);
    REQUIRE(record.occurred < config.env.n);
    total += record.reward;
  }
  CHECK(total == trajectory.cumulative_reward);
  CHECK(trajectory.cumulative_reward >= 0);
  CHECK(trajectory.cumulative_reward <= static_cast<long long>(config.steps));
}

TEST_CASE("knowledge value never decreases in independent environments") {
  SimConfig config;
  config.env.n = 5;
  config.env.base = BaseDistribution::custom({0.4, 0.3, 0.15, 0.1, 0.05});
  config.steps = 200;
  config.seed = 11;
  for (const PolicyKind policy :
       {PolicyKind::Rational, PolicyKind::Novelty, PolicyKind::Random}) {
    config.policy = policy;
    const Trajectory trajectory = run(config);
    double previous = 0.0;
    for (const StepRecord& record : trajectory.records) {
      CHECK(record.knowledge_value >= previous - 1e-12);
      previous = record.knowledge_value;
    }
    check_replay(trajectory);
  }
}

TEST_CASE("coupled environments keep total confidence growing") {
  for (const CouplingMode coupling :
       {CouplingMode::ExposureCoupled, CouplingMode::ConfidenceCoupled}) {
    SimConfig config;
    config.env.n = 5;
    config.env.coupling = coupling;
    config.steps = 150;
    config.seed = 21;
    const Trajectory trajectory = run(config);
    check_replay(trajectory);
    AgentState state(config.env.n);
    double previous_total = 0.0;
    for (const StepRecord& record : trajectory.records) {
      state.add_exposure(record.chosen, config.exposure_increment);
      double total = 0.0;
      for (std::size_t k = 0; k < state.size(); ++k) {
        total += confidence(config.env.growth, state.exposure(k));
      }
      CHECK(total >= previous_total - 1e-12);
      previous_total = total;
    }
  }
}

TEST_CASE("first selection is uniform when all scores tie") {
  SimConfig config;
  config.env.n = 4;
  config.steps = 1;
  std::array<int, 4> counts{};
  const int trials = 4000;
  for (int seed = 0; seed < trials; ++seed) {
    config.seed = static_cast<std::uint64_t>(seed);
    ++counts[run(config).records[0].chosen];
  }
  double chi2 = 0.0;
  for (const int c : counts) {
    const double expected = trials / 4.0;
    chi2 += (c - expected) * (c - expected) / expected;
  }
  // Critical value at significance 0.01 for 3 degrees of freedom.
  CHECK(chi2 < 11.345);
}

TEST_CASE("config validation rejects degenerate runs") {
  SimConfig config;
  config.steps = 0;
  CHECK_THROWS_AS(config.validate(), ConfigError);
  config.steps = 1;
  config.exposure_increment = 0.0;
  CHECK_THROWS_AS(config.validate(), ConfigError);
  config.exposure_increment = 1.0;
  config.env.n = 0;
  CHECK_THROWS_AS(config.validate(), ConfigError);
}

TEST_CASE("compare aggregates replications per policy") {
  SimConfig base;
  base.env.n = 6;
  base.steps = 40;
  base.seed = 3;
  SimConfig random = base;
  random.policy = PolicyKind::Random;
  const std::vector<SimConfig> configs = {base, random};
  const std::vector<PolicySummary> summaries = compare(configs, 10);
  REQUIRE(summaries.size() == 2);
  CHECK(summaries[0].policy == PolicyKind::Rational);
  CHECK(summaries[1].policy == PolicyKind::Random);
  for (const PolicySummary& summary : summaries) {
    CHECK(summary.replications == 10);
    CHECK(summary.mean_cumulative_reward >= 0.0);
    CHECK(summary.mean_cumulative_reward <= 40.0);
    CHECK(summary.stddev_cumulative_reward >= 0.0);
  }

  const std::vector<PolicySummary> again = compare(configs, 10);
  CHECK(again[0].mean_cumulative_reward == summaries[0].mean_cumulative_reward);
  CHECK(again[1].stddev_cumulative_reward == summaries[1].stddev_cumulative_reward);
}

TEST_CASE("compare rejects inconsistent benchmark setups") {
  SimConfig base;
  base.env.n = 4;
  base.steps = 10;
  SimConfig other = base;
  other.env.n = 5;
  CHECK_THROWS_AS(compare(std::vector<SimConfig>{base, other}, 5), ConfigError);
  CHECK_THROWS_AS(compare(std::vector<SimConfig>{base}, 1), ConfigError);
  CHECK_THROWS_AS(compare(std::vector<SimConfig>{}, 5), ConfigError);
}
