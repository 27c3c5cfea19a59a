// SPDX-License-Identifier: Apache-2.0
#include "curio/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>

#include "curio/errors.hpp"

namespace curio {

using nlohmann::json;

void AnalysisSettings::validate() const {
  if (permutations < 1) throw ConfigError("permutations must be at least 1");
  if (!(bin_width > 0.0) || bin_width > 1.0) {
    throw ConfigError("bin_width must lie in (0, 1]");
  }
  if (!(alpha > 0.0) || !(alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
}

SimConfig RunConfig::simulation(PolicyKind which) const {
  return SimConfig{environment, which, steps, exposure_increment, seed};
}

ExperimentConfig RunConfig::experiment_config() const {
  ExperimentConfig config = experiment;
  config.seed = seed;
  return config;
}

namespace {

void check_keys(const json& obj, const std::string& context,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* key) { return item.key() == key; });
    if (!known) throw ConfigError("unknown key '" + item.key() + "' in " + context);
  }
}

const json* find(const json& obj, const char* key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

std::string describe(const char* key, const std::string& context) {
  return "key '" + std::string(key) + "' in " + context;
}

double get_double(const json& obj, const char* key, double fallback,
                  const std::string& context) {
  const json* value = find(obj, key);
  if (value == nullptr) return fallback;
  if (!value->is_number()) throw ConfigError(describe(key, context) + " must be a number");
  return value->get<double>();
}

std::uint64_t get_u64(const json& obj, const char* key, std::uint64_t fallback,
                      const std::string& context) {
  const json* value = find(obj, key);
  if (value == nullptr) return fallback;
  // Accept any integer representation, but not floats or negative values.
  const bool non_negative_integer =
      value->is_number_unsigned() ||
      (value->is_number_integer() && value->get<std::int64_t>() >= 0);
  if (!non_negative_integer) {
    throw ConfigError(describe(key, context) + " must be a non-negative integer");
  }
  return value->get<std::uint64_t>();
}

std::size_t get_size(const json& obj, const char* key, std::size_t fallback,
                     const std::string& context) {
  return static_cast<std::size_t>(
      get_u64(obj, key, static_cast<std::uint64_t>(fallback), context));
}

std::string get_string(const json& obj, const char* key, const std::string& fallback,
                       const std::string& context) {
  const json* value = find(obj, key);
  if (value == nullptr) return fallback;
  if (!value->is_string()) throw ConfigError(describe(key, context) + " must be a string");
  return value->get<std::string>();
}

const json& get_section(const json& doc, const char* key) {
  const json& section = doc.at(key);
  if (!section.is_object()) {
    throw ConfigError("section '" + std::string(key) + "' must be an object");
  }
  return section;
}

void parse_environment(const json& obj, EnvironmentSpec& env) {
  check_keys(obj, "environment", {"n", "coupling", "base", "growth_rate", "smoothing"});
  env.n = get_size(obj, "n", env.n, "environment");
  env.coupling = parse_coupling_mode(
      get_string(obj, "coupling", to_string(env.coupling), "environment"));
  if (const json* base = find(obj, "base")) {
    if (!base->is_object()) {
      throw ConfigError("key 'base' in environment must be an object");
    }
    check_keys(*base, "environment.base", {"kind", "zipf_exponent", "probs"});
    const std::string kind = get_string(*base, "kind", "uniform", "environment.base");
    if (kind == "uniform") {
      if (find(*base, "zipf_exponent") != nullptr || find(*base, "probs") != nullptr) {
        throw ConfigError("uniform base distribution takes no extra keys");
      }
      env.base = BaseDistribution::uniform();
    } else if (kind == "zipf") {
      if (find(*base, "probs") != nullptr) {
        throw ConfigError("key 'probs' in environment.base only applies to kind 'custom'");
      }
      env.base =
          BaseDistribution::zipf(get_double(*base, "zipf_exponent", 1.0, "environment.base"));
    } else if (kind == "custom") {
      if (find(*base, "zipf_exponent") != nullptr) {
        throw ConfigError(
            "key 'zipf_exponent' in environment.base only applies to kind 'zipf'");
      }
      const json* probs = find(*base, "probs");
      if (probs == nullptr) {
        throw ConfigError("missing key 'probs' in environment.base for kind 'custom'");
      }
      if (!probs->is_array()) {
        throw ConfigError("key 'probs' in environment.base must be an array of numbers");
      }
      std::vector<double> values;
      values.reserve(probs->size());
      for (const json& entry : *probs) {
        if (!entry.is_number()) {
          throw ConfigError("key 'probs' in environment.base must be an array of numbers");
        }
        values.push_back(entry.get<double>());
      }
      env.base = BaseDistribution::custom(std::move(values));
    } else {
      throw ConfigError("unknown base distribution kind: " + kind);
    }
  }
  const double rate = get_double(obj, "growth_rate", env.growth.rate(), "environment");
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw ConfigError("key 'growth_rate' in environment must be positive and finite");
  }
  env.growth = GrowthModel(rate);
  env.smoothing = get_double(obj, "smoothing", env.smoothing, "environment");
}

void parse_simulation(const json& obj, RunConfig& config) {
  check_keys(obj, "simulation",
             {"policy", "policies", "steps", "exposure_increment", "replications"});
  config.policy =
      parse_policy_kind(get_string(obj, "policy", to_string(config.policy), "simulation"));
  if (const json* policies = find(obj, "policies")) {
    if (!policies->is_array() || policies->empty()) {
      throw ConfigError("key 'policies' in simulation must be a non-empty array");
    }
    config.compare_policies.clear();
    for (const json& entry : *policies) {
      if (!entry.is_string()) {
        throw ConfigError("key 'policies' in simulation must contain policy names");
      }
      config.compare_policies.push_back(parse_policy_kind(entry.get<std::string>()));
    }
  }
  config.steps = get_size(obj, "steps", config.steps, "simulation");
  config.exposure_increment =
      get_double(obj, "exposure_increment", config.exposure_increment, "simulation");
  config.replications = get_size(obj, "replications", config.replications, "simulation");
}

void parse_experiment(const json& obj, ExperimentConfig& experiment) {
  check_keys(obj, "experiment",
             {"n_participants", "n_questions", "n_bonus_sampled", "initial_exposures",
              "rating_noise_sd", "confidence_noise_sd", "reveal_steepness",
              "reveal_threshold", "wait_penalty"});
  experiment.n_participants =
      get_size(obj, "n_participants", experiment.n_participants, "experiment");
  experiment.n_questions = get_size(obj, "n_questions", experiment.n_questions, "experiment");
  experiment.n_bonus_sampled =
      get_size(obj, "n_bonus_sampled", experiment.n_bonus_sampled, "experiment");
  ParticipantModel& model = experiment.participant;
  if (const json* draw = find(obj, "initial_exposures")) {
    if (!draw->is_object()) {
      throw ConfigError("key 'initial_exposures' in experiment must be an object");
    }
    check_keys(*draw, "experiment.initial_exposures", {"kind", "value"});
    const std::string kind =
        get_string(*draw, "kind", "exponential", "experiment.initial_exposures");
    const double value = get_double(*draw, "value", 1.0, "experiment.initial_exposures");
    if (kind == "exponential") {
      model.initial_exposures = ExposureDraw::exponential(value);
    } else if (kind == "fixed") {
      model.initial_exposures = ExposureDraw::fixed(value);
    } else {
      throw ConfigError("unknown exposure draw kind: " + kind);
    }
  }
  model.rating_noise_sd =
      get_double(obj, "rating_noise_sd", model.rating_noise_sd, "experiment");
  model.confidence_noise_sd =
      get_double(obj, "confidence_noise_sd", model.confidence_noise_sd, "experiment");
  model.reveal_steepness =
      get_double(obj, "reveal_steepness", model.reveal_steepness, "experiment");
  model.reveal_threshold =
      get_double(obj, "reveal_threshold", model.reveal_threshold, "experiment");
  model.wait_penalty = get_double(obj, "wait_penalty", model.wait_penalty, "experiment");
}

void parse_analysis(const json& obj, AnalysisSettings& analysis) {
  check_keys(obj, "analysis", {"permutations", "bin_width", "alpha", "confidence_scale"});
  analysis.permutations = get_size(obj, "permutations", analysis.permutations, "analysis");
  analysis.bin_width = get_double(obj, "bin_width", analysis.bin_width, "analysis");
  analysis.alpha = get_double(obj, "alpha", analysis.alpha, "analysis");
  const std::string scale = get_string(obj, "confidence_scale",
                                       analysis.percent_confidence ? "percent" : "unit",
                                       "analysis");
  if (scale == "unit") {
    analysis.percent_confidence = false;
  } else if (scale == "percent") {
    analysis.percent_confidence = true;
  } else {
    throw ConfigError("key 'confidence_scale' in analysis must be 'unit' or 'percent'");
  }
}

}  // namespace

RunConfig parse_run_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("configuration root must be an object");
  check_keys(doc, "configuration root",
             {"seed", "environment", "simulation", "experiment", "analysis"});
  RunConfig config;
  config.seed = get_u64(doc, "seed", config.seed, "configuration root");
  if (find(doc, "environment") != nullptr) {
    parse_environment(get_section(doc, "environment"), config.environment);
  }
  if (find(doc, "simulation") != nullptr) {
    parse_simulation(get_section(doc, "simulation"), config);
  }
  if (find(doc, "experiment") != nullptr) {
    parse_experiment(get_section(doc, "experiment"), config.experiment);
  }
  if (find(doc, "analysis") != nullptr) {
    parse_analysis(get_section(doc, "analysis"), config.analysis);
  }
  config.environment.validate();
  config.simulation().validate();
  if (config.replications < 2) {
    throw ConfigError("key 'replications' in simulation must be at least 2");
  }
  config.experiment_config().validate();
  config.analysis.validate();
  return config;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open config file: " + path);
  json doc;
  try {
    doc = json::parse(file);
  } catch (const json::parse_error& error) {
    throw ConfigError("malformed configuration in " + path + ": " + error.what());
  }
  return parse_run_config(doc);
}

json resolved_config_json(const RunConfig& config) {
  json base;
  switch (config.environment.base.kind) {
    case BaseDistribution::Kind::Uniform:
      base = {{"kind", "uniform"}};
      break;
    case BaseDistribution::Kind::Zipf:
      base = {{"kind", "zipf"}, {"zipf_exponent", config.environment.base.zipf_exponent}};
      break;
    case BaseDistribution::Kind::Custom:
      base = {{"kind", "custom"}, {"probs", config.environment.base.custom_probs}};
      break;
  }
  json policies = json::array();
  for (const PolicyKind policy : config.compare_policies) {
    policies.push_back(to_string(policy));
  }
  const ParticipantModel& model = config.experiment.participant;
  const bool exponential =
      model.initial_exposures.kind == ExposureDraw::Kind::Exponential;
  return json{
      {"seed", config.seed},
      {"environment",
       {{"n", config.environment.n},
        {"coupling", to_string(config.environment.coupling)},
        {"base", base},
        {"growth_rate", config.environment.growth.rate()},
        {"smoothing", config.environment.smoothing}}},
      {"simulation",
       {{"policy", to_string(config.policy)},
        {"policies", policies},
        {"steps", config.steps},
        {"exposure_increment", config.exposure_increment},
        {"replications", config.replications}}},
      {"experiment",
       {{"n_participants", config.experiment.n_participants},
        {"n_questions", config.experiment.n_questions},
        {"n_bonus_sampled", config.experiment.n_bonus_sampled},
        {"initial_exposures",
         {{"kind", exponential ? "exponential" : "fixed"},
          {"value", model.initial_exposures.value}}},
        {"rating_noise_sd", model.rating_noise_sd},
        {"confidence_noise_sd", model.confidence_noise_sd},
        {"reveal_steepness", model.reveal_steepness},
        {"reveal_threshold", model.reveal_threshold},
        {"wait_penalty", model.wait_penalty}}},
      {"analysis",
       {{"permutations", config.analysis.permutations},
        {"bin_width", config.analysis.bin_width},
        {"alpha", config.analysis.alpha},
        {"confidence_scale", config.analysis.percent_confidence ? "percent" : "unit"}}}};
}

}  // namespace curio
