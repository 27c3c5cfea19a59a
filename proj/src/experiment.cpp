// SPDX-License-Identifier: Apache-2.0
#include "curio/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "curio/csv.hpp"
#include "curio/errors.hpp"

namespace curio {

void ParticipantModel::validate() const {
  if (initial_exposures.kind == ExposureDraw::Kind::Exponential) {
    if (!(initial_exposures.value > 0.0) || !std::isfinite(initial_exposures.value)) {
      throw ConfigError("exposure mean must be positive and finite");
    }
  } else {
    if (initial_exposures.value < 0.0 || !std::isfinite(initial_exposures.value)) {
      throw ConfigError("fixed exposure must be non-negative and finite");
    }
  }
  if (rating_noise_sd < 0.0 || !std::isfinite(rating_noise_sd)) {
    throw ConfigError("rating noise sd must be non-negative and finite");
  }
  if (confidence_noise_sd < 0.0 || !std::isfinite(confidence_noise_sd)) {
    throw ConfigError("confidence noise sd must be non-negative and finite");
  }
  if (!(reveal_steepness > 0.0) || !std::isfinite(reveal_steepness)) {
    throw ConfigError("reveal steepness must be positive and finite");
  }
  if (!std::isfinite(reveal_threshold)) {
    throw ConfigError("reveal threshold must be finite");
  }
  if (wait_penalty < 0.0 || wait_penalty > 1.0) {
    throw ConfigError("wait penalty must lie in [0, 1]");
  }
}

const char* to_string(Condition condition) {
  switch (condition) {
    case Condition::ConfidenceSampling: return "confidence";
    case Condition::UniformSampling: return "uniform";
  }
  throw std::logic_error("unreachable condition");
}

Condition parse_condition(const std::string& name) {
  if (name == "confidence") return Condition::ConfidenceSampling;
  if (name == "uniform") return Condition::UniformSampling;
  throw ConfigError("unknown condition: " + name);
}

void ExperimentConfig::validate() const {
  if (n_participants < 1) throw ConfigError("n_participants must be at least 1");
  if (n_questions < 1) throw ConfigError("n_questions must be at least 1");
  if (n_bonus_sampled > n_questions) {
    throw ConfigError("n_bonus_sampled must not exceed n_questions");
  }
  participant.validate();
}

std::size_t ParticipantRecord::reveal_count() const {
  return static_cast<std::size_t>(
      std::count(bonus.revealed.begin(), bonus.revealed.end(), true));
}

namespace {

double clip01(double x) { return std::clamp(x, 0.0, 1.0); }

double draw_exposure(const ExposureDraw& draw, Rng& rng) {
  if (draw.kind == ExposureDraw::Kind::Fixed) return draw.value;
  return rng.exponential(draw.value);
}

}  // namespace

std::vector<MainRoundQuestion> simulate_main_round(const ParticipantModel& model,
                                                   std::size_t n_questions, Rng& rng) {
  std::vector<MainRoundQuestion> questions;
  questions.reserve(n_questions);
  for (std::size_t q = 0; q < n_questions; ++q) {
    const double h = draw_exposure(model.initial_exposures, rng);
    const double true_c = 1.0 - std::exp(-h);
    const double reported_c = clip01(true_c + rng.normal(0.0, model.confidence_noise_sd));
    // Latent curiosity peaks at c = 1/2; dividing by the peak value 1/4
    // stretches it over [0, 1] before the affine map onto the 1-7 scale.
    const double latent = true_c * (1.0 - true_c) / 0.25;
    const double noisy = 1.0 + 6.0 * latent + rng.normal(0.0, model.rating_noise_sd);
    const int rating = static_cast<int>(std::clamp<long>(std::lround(noisy), 1, 7));
    questions.push_back({true_c, reported_c, rating});
  }
  return questions;
}

std::vector<double> bonus_latent_curiosity(std::span<const MainRoundQuestion> questions,
                                           Condition condition) {
  std::vector<double> latent(questions.size());
  for (std::size_t q = 0; q < questions.size(); ++q) {
    const double gap = 1.0 - questions[q].true_confidence;
    latent[q] = condition == Condition::ConfidenceSampling
                    ? questions[q].reported_confidence * gap
                    : gap;
  }
  const double peak = latent.empty() ? 0.0 : *std::max_element(latent.begin(), latent.end());
  for (double& value : latent) value = peak > 0.0 ? value / peak : 0.0;
  return latent;
}

double reveal_probability(double latent, const ParticipantModel& model) {
  const double logit = model.reveal_steepness * (latent - model.reveal_threshold);
  const double p = 1.0 / (1.0 + std::exp(-logit));
  return clip01(p - model.wait_penalty);
}

BonusRound simulate_bonus_round(std::span<const MainRoundQuestion> questions,
                                Condition condition, const ParticipantModel& model,
                                std::size_t n_bonus_sampled, Rng& rng) {
  BonusRound bonus;
  const std::vector<double> latent = bonus_latent_curiosity(questions, condition);
  bonus.revealed.reserve(questions.size());
  for (std::size_t q = 0; q < questions.size(); ++q) {
    bonus.revealed.push_back(rng.bernoulli(reveal_probability(latent[q], model)));
  }
  std::vector<double> weights(questions.size());
  for (std::size_t q = 0; q < questions.size(); ++q) {
    weights[q] = condition == Condition::ConfidenceSampling
                     ? questions[q].reported_confidence + 1e-6
                     : 1.0;
  }
  bonus.sampled = sample_without_replacement(weights, n_bonus_sampled, rng);
  for (const std::size_t q : bonus.sampled) {
    if (rng.bernoulli(questions[q].true_confidence)) ++bonus.correct;
  }
  return bonus;
}

ParticipantDataset run_experiment(const ExperimentConfig& config) {
  config.validate();
  ParticipantDataset dataset;
  dataset.n_questions = config.n_questions;
  dataset.participants.reserve(2 * config.n_participants);
  const Condition conditions[] = {Condition::ConfidenceSampling, Condition::UniformSampling};
  for (std::size_t c = 0; c < 2; ++c) {
    for (std::size_t i = 0; i < config.n_participants; ++i) {
      const std::size_t pid = c * config.n_participants + i;
      Rng rng(derive_seed(config.seed, pid));
      ParticipantRecord record;
      record.participant_id = pid;
      record.condition = conditions[c];
      record.questions = simulate_main_round(config.participant, config.n_questions, rng);
      record.bonus = simulate_bonus_round(record.questions, record.condition,
                                          config.participant, config.n_bonus_sampled, rng);
      dataset.participants.push_back(std::move(record));
    }
  }
  return dataset;
}

ExclusionSummary apply_exclusion(const ParticipantDataset& dataset) {
  const double n = static_cast<double>(dataset.n_questions);
  // The epsilon keeps exactly-representable products like 0.075 * 40 = 3
  // from rounding to the wrong side of the band.
  const auto low = static_cast<std::size_t>(std::ceil(0.075 * n - 1e-9));
  const auto high = static_cast<std::size_t>(std::floor(0.925 * n + 1e-9));
  ExclusionSummary summary;
  summary.retained.n_questions = dataset.n_questions;
  for (const ParticipantRecord& record : dataset.participants) {
    const std::size_t reveals = record.reveal_count();
    const bool keep = reveals >= low && reveals <= high;
    const bool is_confidence = record.condition == Condition::ConfidenceSampling;
    if (keep) {
      summary.retained.participants.push_back(record);
      (is_confidence ? summary.retained_confidence : summary.retained_uniform) += 1;
    } else {
      summary.excluded += 1;
      (is_confidence ? summary.excluded_confidence : summary.excluded_uniform) += 1;
    }
  }
  return summary;
}

void write_ratings_csv(const ParticipantDataset& dataset, std::ostream& out) {
  write_row(out, {"participant_id", "condition", "question_id", "true_confidence",
                  "reported_confidence", "curiosity_rating"});
  for (const ParticipantRecord& record : dataset.participants) {
    for (std::size_t q = 0; q < record.questions.size(); ++q) {
      const MainRoundQuestion& question = record.questions[q];
      write_row(out, {std::to_string(record.participant_id), to_string(record.condition),
                      std::to_string(q), format_double(question.true_confidence),
                      format_double(question.reported_confidence),
                      std::to_string(question.curiosity_rating)});
    }
  }
}

void write_reveals_csv(const ParticipantDataset& dataset, std::ostream& out) {
  write_row(out, {"participant_id", "condition", "question_id", "reported_confidence",
                  "revealed"});
  for (const ParticipantRecord& record : dataset.participants) {
    for (std::size_t q = 0; q < record.questions.size(); ++q) {
      write_row(out, {std::to_string(record.participant_id), to_string(record.condition),
                      std::to_string(q),
                      format_double(record.questions[q].reported_confidence),
                      record.bonus.revealed[q] ? "1" : "0"});
    }
  }
}

}  // namespace curio
