// SPDX-License-Identifier: Apache-2.0
//
// Curiosity scoring rules and the greedy stimulus-selection rule. The
// rational score is the exact marginal knowledge gain; the novelty,
// information-gap, and learning-progress rules are the classic alternatives
// it subsumes, and the random rule is the control arm for benchmarks.
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "curio/environment.hpp"
#include "curio/model.hpp"
#include "curio/rng.hpp"

namespace curio {

enum class PolicyKind { Rational, Novelty, InfoGap, LearningProgress, Random };

const char* to_string(PolicyKind policy);
PolicyKind parse_policy_kind(const std::string& name);

/// One non-negative, finite curiosity score per stimulus.
struct CuriosityScores {
  std::vector<double> values;

  explicit CuriosityScores(std::vector<double> v);

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t k) const { return values[k]; }
};

/// Scores every stimulus under the given policy.
///   Rational         : p_k * rate * exp(-rate * h_k)   (marginal value)
///   Novelty          : 1 - c_k
///   InfoGap          : -c_k * ln(c_k), with 0 * ln(0) taken as 0
///   LearningProgress : h_k * exp(-rate * h_k)
///   Random           : 1 for every stimulus
/// Only the rational policy consults the need distribution.
CuriosityScores score(PolicyKind policy, const NeedDistribution& p,
                      const AgentState& state, const GrowthModel& model);

/// Picks an index attaining the maximum score; ties are broken uniformly at
/// random. Consumes randomness even when the maximum is unique, so two runs
/// with equal-ranking policies stay in lockstep.
std::size_t select(const CuriosityScores& scores, Rng& rng);

/// Theoretical curiosity as a function of confidence, for reproducing the
/// model's predicted curve shapes. The coupling mode picks the relation for
/// the rational policy:
///   Rational + Independent       : 1 - c            (decreasing)
///   Rational + ExposureCoupled   : -ln(1-c) * (1-c) (peak at 1 - 1/e)
///   Rational + ConfidenceCoupled : c * (1-c)        (peak at 1/2)
///   Novelty                      : 1 - c
///   InfoGap                      : -c * ln(c)       (peak at 1/e)
///   LearningProgress             : -ln(1-c) * (1-c)
///   Random                       : 1
/// Grid values must lie in [0, 1).
std::vector<std::pair<double, double>> curiosity_vs_confidence(
    PolicyKind policy, CouplingMode coupling, std::span<const double> grid);

/// Companion curve over exposure instead of confidence. Grid values must be
/// non-negative. The need probability is treated as a constant 1 for the
/// independent rational relation.
std::vector<std::pair<double, double>> curiosity_vs_exposure(
    PolicyKind policy, CouplingMode coupling, std::span<const double> grid,
    const GrowthModel& model = GrowthModel{});

}  // namespace curio
