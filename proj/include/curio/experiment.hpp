// SPDX-License-Identifier: Apache-2.0
//
// In-silico replication of the two-condition behavioral experiment:
// simulated participants rate confidence and curiosity for a set of
// questions (main round), then decide per question whether to reveal the
// answer at a time cost, after which a subset of questions is sampled and
// quizzed (bonus round). The two conditions differ only in the bonus
// sampling rule: weighted by the participant's reported confidence, or
// uniform.
#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "curio/rng.hpp"

namespace curio {

/// How a simulated participant's prior exposure to each question is drawn.
struct ExposureDraw {
  enum class Kind { Exponential, Fixed };
  Kind kind = Kind::Exponential;
  double value = 1.0;  // mean for Exponential, the exposure itself for Fixed

  static ExposureDraw exponential(double mean) { return {Kind::Exponential, mean}; }
  static ExposureDraw fixed(double h) { return {Kind::Fixed, h}; }

  bool operator==(const ExposureDraw&) const = default;
};

/// Generative model of one participant. Defaults give moderate noise and a
/// soft logistic reveal rule; the wait penalty is the flat probability cost
/// of sitting through the delay a reveal incurs.
struct ParticipantModel {
  ExposureDraw initial_exposures;
  double rating_noise_sd = 0.5;      // on the 1-7 curiosity scale
  double confidence_noise_sd = 0.05; // on the 0-1 confidence scale
  double reveal_steepness = 4.0;
  double reveal_threshold = 0.5;
  double wait_penalty = 0.1;

  void validate() const;

  bool operator==(const ParticipantModel&) const = default;
};

enum class Condition { ConfidenceSampling, UniformSampling };

const char* to_string(Condition condition);
Condition parse_condition(const std::string& name);

struct ExperimentConfig {
  std::size_t n_participants = 200;  // per condition
  std::size_t n_questions = 40;
  std::size_t n_bonus_sampled = 10;
  ParticipantModel participant;
  std::uint64_t seed = 0;

  void validate() const;

  bool operator==(const ExperimentConfig&) const = default;
};

struct MainRoundQuestion {
  double true_confidence;      // in [0, 1)
  double reported_confidence;  // in [0, 1]
  int curiosity_rating;        // in {1..7}
};

struct BonusRound {
  std::vector<bool> revealed;          // one flag per main-round question
  std::vector<std::size_t> sampled;    // quizzed question ids, in draw order
  std::size_t correct = 0;             // quiz questions answered correctly
};

struct ParticipantRecord {
  std::size_t participant_id;
  Condition condition;
  std::vector<MainRoundQuestion> questions;
  BonusRound bonus;

  std::size_t reveal_count() const;
};

struct ParticipantDataset {
  std::size_t n_questions = 0;
  std::vector<ParticipantRecord> participants;
};

/// Rates every question: draws prior exposure, derives true confidence
/// c = 1 - exp(-h), adds reporting noise, and maps the latent curiosity
/// c(1-c) (rescaled by its theoretical maximum 1/4) affinely onto the
/// 1-7 rating scale with noise and rounding.
std::vector<MainRoundQuestion> simulate_main_round(const ParticipantModel& model,
                                                   std::size_t n_questions, Rng& rng);

/// Latent curiosity per question once the condition's sampling rule is
/// known: reported_c * (1 - true_c) under confidence sampling, 1 - true_c
/// under uniform sampling, each rescaled to [0, 1] by its per-participant
/// maximum.
std::vector<double> bonus_latent_curiosity(std::span<const MainRoundQuestion> questions,
                                           Condition condition);

/// clip(logistic(steepness * (latent - threshold)) - wait_penalty, 0, 1)
double reveal_probability(double latent, const ParticipantModel& model);

/// Reveal decisions, the bonus quiz sample (weighted by reported confidence
/// under confidence sampling, uniform otherwise), and the number of quiz
/// questions answered correctly (each with probability true confidence).
BonusRound simulate_bonus_round(std::span<const MainRoundQuestion> questions,
                                Condition condition, const ParticipantModel& model,
                                std::size_t n_bonus_sampled, Rng& rng);

/// Simulates n_participants per condition from independent derived streams.
ParticipantDataset run_experiment(const ExperimentConfig& config);

struct ExclusionSummary {
  ParticipantDataset retained;
  std::size_t excluded = 0;
  std::size_t retained_confidence = 0;
  std::size_t excluded_confidence = 0;
  std::size_t retained_uniform = 0;
  std::size_t excluded_uniform = 0;
};

/// Drops participants who revealed too few or too many answers. For 40
/// questions the retained band is [3, 37]; for other counts it scales as
/// [ceil(0.075 n), floor(0.925 n)].
ExclusionSummary apply_exclusion(const ParticipantDataset& dataset);

/// CSV with header
/// participant_id,condition,question_id,true_confidence,reported_confidence,curiosity_rating
void write_ratings_csv(const ParticipantDataset& dataset, std::ostream& out);

/// CSV with header participant_id,condition,question_id,reported_confidence,revealed
void write_reveals_csv(const ParticipantDataset& dataset, std::ostream& out);

}  // namespace curio
