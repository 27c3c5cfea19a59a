// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "curio/environment.hpp"
#include "curio/errors.hpp"
#include "curio/model.hpp"
#include "curio/policies.hpp"
#include "curio/rng.hpp"

using namespace curio;

namespace {

const GrowthModel kUnitRate;
const NeedDistribution kNeeds({0.2, 0.3, 0.5});
const AgentState kState({0.0, 1.0, 2.0});

std::vector<double> linear_grid(double lo, double hi, double step) {
  std::vector<double> grid;
  for (double x = lo; x <= hi + 1e-12; x += step) grid.push_back(x);
  return grid;
}

double argmax_x(const std::vector<std::pair<double, double>>& curve) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    if (curve[i].second > curve[best].second) best = i;
  }
  return curve[best].first;
}

}  // namespace

TEST_CASE("scores follow each policy's formula") {
  const CuriosityScores rational = score(PolicyKind::Rational, kNeeds, kState, kUnitRate);
  CHECK(rational[0] == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(rational[1] == doctest::Approx(0.1103638323514327).epsilon(1e-12));
  CHECK(rational[2] == doctest::Approx(0.06766764161830635).epsilon(1e-12));

  const CuriosityScores novelty = score(PolicyKind::Novelty, kNeeds, kState, kUnitRate);
  CHECK(novelty[0] == doctest::Approx(1.0));
  CHECK(novelty[1] == doctest::Approx(0.36787944117144233).epsilon(1e-12));
  CHECK(novelty[2] == doctest::Approx(0.1353352832366127).epsilon(1e-12));

  const CuriosityScores info_gap = score(PolicyKind::InfoGap, kNeeds, kState, kUnitRate);
  CHECK(info_gap[0] == 0.0);
  CHECK(info_gap[1] == doctest::Approx(0.2899379892228522).epsilon(1e-12));
  CHECK(info_gap[2] == doctest::Approx(0.12573388636176178).epsilon(1e-12));

  const CuriosityScores progress =
      score(PolicyKind::LearningProgress, kNeeds, kState, kUnitRate);
  CHECK(progress[0] == 0.0);
  CHECK(progress[1] == doctest::Approx(0.36787944117144233).epsilon(1e-12));
  CHECK(progress[2] == doctest::Approx(0.2706705664732254).epsilon(1e-12));

  const CuriosityScores random = score(PolicyKind::Random, kNeeds, kState, kUnitRate);
  for (std::size_t k = 0; k < 3; ++k) CHECK(random[k] == 1.0);

  CHECK_THROWS_AS(score(PolicyKind::Rational, NeedDistribution({1.0}), kState, kUnitRate),
                  DimensionError);
}

TEST_CASE("select picks the unique maximum deterministically") {
  const CuriosityScores scores(std::vector<double>{0.1, 0.9, 0.3});
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    CHECK(select(scores, rng) == 1);
  }
}

TEST_CASE("select breaks ties uniformly") {
  const CuriosityScores scores(std::vector<double>{1.0, 1.0, 0.5});
  int first = 0;
  const int trials = 10000;
  Rng rng(3);
  for (int t = 0; t < trials; ++t) {
    const std::size_t k = select(scores, rng);
    REQUIRE(k < 2);  // index 2 can never win
    first += k == 0 ? 1 : 0;
  }
  CHECK(static_cast<double>(first) / trials == doctest::Approx(0.5).epsilon(0.04));
}

TEST_CASE("select consumes randomness even without ties") {
  const CuriosityScores scores(std::vector<double>{0.1, 0.9});
  Rng used(41);
  (void)select(scores, used);
  Rng fresh(41);
  (void)fresh.next_u64();
  CHECK(used.next_u64() == fresh.next_u64());
}

TEST_CASE("select rejects empty scores") {
  Rng rng(1);
  CHECK_THROWS_AS(select(CuriosityScores(std::vector<double>{}), rng),
                  std::domain_error);
  CHECK_THROWS_AS(CuriosityScores(std::vector<double>{0.5, -0.1}), std::domain_error);
}

TEST_CASE("rational and novelty rank identically under uniform needs") {
  Rng state_rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 20;
    const NeedDistribution p = NeedDistribution::uniform(n);
    std::vector<double> exposures(n);
    for (double& h : exposures) h = 4.0 * state_rng.uniform01();
    const AgentState state(exposures);
    const CuriosityScores rational = score(PolicyKind::Rational, p, state, kUnitRate);
    const CuriosityScores novelty = score(PolicyKind::Novelty, p, state, kUnitRate);
    Rng a(trial);
    Rng b(trial);
    CHECK(select(rational, a) == select(novelty, b));
  }
}

TEST_CASE("curve peaks sit at the analytic optima") {
  const std::vector<double> c_grid = linear_grid(0.0, 0.9999, 1e-4);
  const std::vector<double> h_grid = linear_grid(0.0, 10.0, 1e-4);

  CHECK(argmax_x(curiosity_vs_exposure(PolicyKind::Rational,
                                       CouplingMode::ExposureCoupled, h_grid)) ==
        doctest::Approx(1.0).epsilon(1e-3));
  CHECK(argmax_x(curiosity_vs_exposure(PolicyKind::LearningProgress,
                                       CouplingMode::Independent, h_grid)) ==
        doctest::Approx(1.0).epsilon(1e-3));
  CHECK(argmax_x(curiosity_vs_confidence(PolicyKind::Rational,
                                         CouplingMode::ExposureCoupled, c_grid)) ==
        doctest::Approx(0.6321205588285577).epsilon(1e-3));
  CHECK(argmax_x(curiosity_vs_confidence(PolicyKind::InfoGap, CouplingMode::Independent,
                                         c_grid)) ==
        doctest::Approx(0.36787944117144233).epsilon(1e-3));
  CHECK(argmax_x(curiosity_vs_confidence(PolicyKind::Rational,
                                         CouplingMode::ConfidenceCoupled, c_grid)) ==
        doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("decreasing relations peak at zero confidence") {
  const std::vector<double> c_grid = linear_grid(0.0, 0.9999, 1e-3);
  CHECK(argmax_x(curiosity_vs_confidence(PolicyKind::Rational,
                                         CouplingMode::Independent, c_grid)) == 0.0);
  CHECK(argmax_x(curiosity_vs_confidence(PolicyKind::Novelty, CouplingMode::Independent,
                                         c_grid)) == 0.0);
}

TEST_CASE("curves validate their grids") {
  CHECK_THROWS_AS(curiosity_vs_confidence(PolicyKind::Novelty, CouplingMode::Independent,
                                          std::vector<double>{1.0}),
                  std::domain_error);
  CHECK_THROWS_AS(curiosity_vs_confidence(PolicyKind::Novelty, CouplingMode::Independent,
                                          std::vector<double>{-0.1}),
                  std::domain_error);
  CHECK_THROWS_AS(curiosity_vs_exposure(PolicyKind::Novelty, CouplingMode::Independent,
                                        std::vector<double>{-1.0}),
                  std::domain_error);
}

TEST_CASE("policy names round trip") {
  for (const PolicyKind policy :
       {PolicyKind::Rational, PolicyKind::Novelty, PolicyKind::InfoGap,
        PolicyKind::LearningProgress, PolicyKind::Random}) {
    CHECK(parse_policy_kind(to_string(policy)) == policy);
  }
  CHECK_THROWS_AS(parse_policy_kind("greedy"), ConfigError);
}
