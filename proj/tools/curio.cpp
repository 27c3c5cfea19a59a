// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: run simulations, compare policies, run the
// in-silico experiment, analyze datasets, and emit theoretical curves.
// Exit codes: 0 success, 1 validation error, 2 I/O error.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "curio/analysis.hpp"
#include "curio/config.hpp"
#include "curio/csv.hpp"
#include "curio/environment.hpp"
#include "curio/errors.hpp"
#include "curio/experiment.hpp"
#include "curio/policies.hpp"
#include "curio/simulation.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

using namespace curio;

struct CommonOptions {
  std::string config_path;
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed;
};

struct AnalyzeOptions {
  std::string ratings_path;
  std::string reveals_path;
  std::string condition = "both";
  std::optional<std::size_t> permutations;
  std::optional<double> bin_width;
  std::optional<double> alpha;
  std::optional<std::string> confidence_scale;
};

struct CurvesOptions {
  std::vector<std::string> names;
  std::size_t resolution = 1001;
  double max_exposure = 10.0;
};

RunConfig resolve_config(const CommonOptions& common) {
  RunConfig config =
      common.config_path.empty() ? RunConfig{} : load_run_config(common.config_path);
  if (common.seed.has_value()) config.seed = *common.seed;
  return config;
}

fs::path prepare_out_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir + ": " + ec.message());
  return fs::path(dir);
}

void write_text_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw IoError("failed writing " + path.string());
}

void write_json_file(const fs::path& path, const json& doc) {
  write_text_file(path, doc.dump(2) + "\n");
}

// Every output directory gets the fully resolved configuration plus the
// command parameters that are not part of the configuration document, so a
// run can be reproduced from its artifacts alone.
void write_run_artifacts(const fs::path& out_dir, const RunConfig& config,
                         json manifest) {
  write_json_file(out_dir / "resolved_config.json", resolved_config_json(config));
  write_json_file(out_dir / "manifest.json", std::move(manifest));
}

int cmd_simulate(const CommonOptions& common) {
  const RunConfig config = resolve_config(common);
  const fs::path out_dir = prepare_out_dir(common.out_dir);
  const SimConfig sim = config.simulation();
  const Trajectory trajectory = run(sim);

  std::ostringstream csv;
  write_trajectory_csv(trajectory, csv);
  write_text_file(out_dir / "trajectory.csv", csv.str());

  const double final_value =
      trajectory.records.empty() ? 0.0 : trajectory.records.back().knowledge_value;
  write_json_file(out_dir / "summary.json",
                  json{{"policy", to_string(sim.policy)},
                       {"coupling", to_string(sim.env.coupling)},
                       {"n", sim.env.n},
                       {"steps", sim.steps},
                       {"seed", sim.seed},
                       {"cumulative_reward", trajectory.cumulative_reward},
                       {"final_knowledge_value", final_value}});
  write_run_artifacts(out_dir, config, json{{"command", "simulate"}});
  std::cout << "simulate: " << trajectory.records.size() << " steps, cumulative reward "
            << trajectory.cumulative_reward << ", final knowledge value "
            << format_double(final_value) << "\n";
  return 0;
}

int cmd_compare(const CommonOptions& common, const std::string& format) {
  const RunConfig config = resolve_config(common);
  const fs::path out_dir = prepare_out_dir(common.out_dir);
  std::vector<SimConfig> configs;
  configs.reserve(config.compare_policies.size());
  for (const PolicyKind policy : config.compare_policies) {
    configs.push_back(config.simulation(policy));
  }
  const std::vector<PolicySummary> summaries = compare(configs, config.replications);

  if (format == "json") {
    json rows = json::array();
    for (const PolicySummary& summary : summaries) {
      rows.push_back(json{{"policy", to_string(summary.policy)},
                          {"replications", summary.replications},
                          {"mean_cumulative_reward", summary.mean_cumulative_reward},
                          {"stddev_cumulative_reward", summary.stddev_cumulative_reward}});
    }
    write_json_file(out_dir / "compare.json", rows);
  } else {
    std::ostringstream csv;
    write_row(csv, {"policy", "replications", "mean_cumulative_reward",
                    "stddev_cumulative_reward"});
    for (const PolicySummary& summary : summaries) {
      write_row(csv, {to_string(summary.policy), std::to_string(summary.replications),
                      format_double(summary.mean_cumulative_reward),
                      format_double(summary.stddev_cumulative_reward)});
    }
    write_text_file(out_dir / "compare.csv", csv.str());
  }
  write_run_artifacts(out_dir, config,
                      json{{"command", "compare"}, {"format", format}});
  for (const PolicySummary& summary : summaries) {
    std::cout << to_string(summary.policy) << ": mean cumulative reward "
              << format_double(summary.mean_cumulative_reward) << " (sd "
              << format_double(summary.stddev_cumulative_reward) << ", "
              << summary.replications << " replications)\n";
  }
  return 0;
}

int cmd_experiment(const CommonOptions& common) {
  const RunConfig config = resolve_config(common);
  const fs::path out_dir = prepare_out_dir(common.out_dir);
  const ParticipantDataset dataset = run_experiment(config.experiment_config());
  const ExclusionSummary exclusion = apply_exclusion(dataset);

  std::ostringstream ratings;
  write_ratings_csv(exclusion.retained, ratings);
  write_text_file(out_dir / "ratings.csv", ratings.str());
  std::ostringstream reveals;
  write_reveals_csv(exclusion.retained, reveals);
  write_text_file(out_dir / "reveals.csv", reveals.str());

  std::ostringstream report;
  report << "confidence: retained " << exclusion.retained_confidence << ", excluded "
         << exclusion.excluded_confidence << "\n"
         << "uniform: retained " << exclusion.retained_uniform << ", excluded "
         << exclusion.excluded_uniform << "\n"
         << "total: retained " << exclusion.retained.participants.size() << ", excluded "
         << exclusion.excluded << "\n";
  write_text_file(out_dir / "exclusions.txt", report.str());
  write_run_artifacts(out_dir, config, json{{"command", "experiment"}});
  std::cout << "experiment: retained " << exclusion.retained.participants.size()
            << " of " << dataset.participants.size() << " participants (excluded "
            << exclusion.excluded << ")\n";
  return 0;
}

std::vector<double> maybe_rescale(std::vector<double> values,
                                  const AnalysisSettings& settings) {
  if (!settings.percent_confidence) return values;
  return rescale_confidence(values);
}

json fit_report(const RegressionFit& fit, Shape shape) {
  return json{{"intercept", fit.intercept},
              {"coef_confidence", fit.coef_confidence},
              {"coef_uncertainty", fit.coef_uncertainty},
              {"r", fit.r},
              {"p_confidence", fit.p_confidence},
              {"p_uncertainty", fit.p_uncertainty},
              {"n_obs", fit.n_obs},
              {"shape", to_string(shape)}};
}

std::string bins_csv(const BinnedCurve& curve) {
  std::ostringstream out;
  write_row(out, {"bin_center", "mean", "count"});
  for (std::size_t b = 0; b < curve.bin_centers.size(); ++b) {
    write_row(out, {format_double(curve.bin_centers[b]),
                    curve.counts[b] > 0 ? format_double(curve.means[b]) : "nan",
                    std::to_string(curve.counts[b])});
  }
  return out.str();
}

// Fits one condition's observations and writes fit_<label>_<condition>.json
// and bins_<label>_<condition>.csv.
void analyze_one(const fs::path& out_dir, const std::string& label,
                 Condition condition, std::span<const double> y,
                 std::span<const double> c, const AnalysisSettings& settings,
                 std::uint64_t seed) {
  if (y.empty()) {
    std::cout << label << " " << to_string(condition) << ": no observations\n";
    return;
  }
  const RegressionFit fit = quadratic_fit(y, c, settings.permutations, seed);
  const Shape shape = classify_shape(fit, settings.alpha);
  const std::string suffix = label + "_" + to_string(condition);
  write_json_file(out_dir / ("fit_" + suffix + ".json"), fit_report(fit, shape));
  write_text_file(out_dir / ("bins_" + suffix + ".csv"),
                  bins_csv(bin_curve(c, y, settings.bin_width)));
  std::cout << label << " " << to_string(condition) << ": " << to_string(shape)
            << " (coef_confidence " << format_double(fit.coef_confidence)
            << ", p " << format_double(fit.p_confidence) << "; coef_uncertainty "
            << format_double(fit.coef_uncertainty) << ", p "
            << format_double(fit.p_uncertainty) << "; n " << fit.n_obs << ")\n";
}

void analyze_ratings(const fs::path& out_dir, const std::string& path,
                     Condition condition, const AnalysisSettings& settings,
                     std::uint64_t seed) {
  const CsvTable table =
      read_csv(path, {"participant_id", "condition", "question_id", "true_confidence",
                      "reported_confidence", "curiosity_rating"});
  // Group ratings by participant for the per-participant normalization,
  // preserving row order so the flattened outcome lines up with confidence.
  std::map<std::uint64_t, std::size_t> participant_index;
  std::vector<std::vector<double>> rating_groups;
  std::vector<std::vector<double>> confidence_groups;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const std::vector<std::string>& row = table.rows[i];
    const std::size_t row_number = i + 2;  // 1-based, after the header
    if (parse_condition(row[1]) != condition) continue;
    const std::uint64_t pid = parse_u64_field(row[0], row_number);
    const auto [it, inserted] = participant_index.emplace(pid, rating_groups.size());
    if (inserted) {
      rating_groups.emplace_back();
      confidence_groups.emplace_back();
    }
    rating_groups[it->second].push_back(parse_double_field(row[5], row_number));
    confidence_groups[it->second].push_back(parse_double_field(row[4], row_number));
  }
  const std::vector<std::vector<double>> z_groups = normalize_curiosity(rating_groups);
  std::vector<double> y;
  std::vector<double> c;
  for (std::size_t g = 0; g < z_groups.size(); ++g) {
    y.insert(y.end(), z_groups[g].begin(), z_groups[g].end());
    c.insert(c.end(), confidence_groups[g].begin(), confidence_groups[g].end());
  }
  analyze_one(out_dir, "main", condition, y, maybe_rescale(std::move(c), settings),
              settings, seed);
}

void analyze_reveals(const fs::path& out_dir, const std::string& path,
                     Condition condition, const AnalysisSettings& settings,
                     std::uint64_t seed) {
  const CsvTable table = read_csv(path, {"participant_id", "condition", "question_id",
                                         "reported_confidence", "revealed"});
  std::vector<double> y;
  std::vector<double> c;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const std::vector<std::string>& row = table.rows[i];
    const std::size_t row_number = i + 2;
    if (parse_condition(row[1]) != condition) continue;
    const std::uint64_t revealed = parse_u64_field(row[4], row_number);
    if (revealed > 1) {
      throw IoError("revealed flag must be 0 or 1 (row " + std::to_string(row_number) +
                    ")");
    }
    y.push_back(revealed == 1 ? 1.0 : 0.0);
    c.push_back(parse_double_field(row[3], row_number));
  }
  analyze_one(out_dir, "reveals", condition, y, maybe_rescale(std::move(c), settings),
              settings, seed);
}

int cmd_analyze(const CommonOptions& common, const AnalyzeOptions& options) {
  RunConfig config = resolve_config(common);
  AnalysisSettings settings = config.analysis;
  if (options.permutations.has_value()) settings.permutations = *options.permutations;
  if (options.bin_width.has_value()) settings.bin_width = *options.bin_width;
  if (options.alpha.has_value()) settings.alpha = *options.alpha;
  if (options.confidence_scale.has_value()) {
    settings.percent_confidence = *options.confidence_scale == "percent";
  }
  settings.validate();
  config.analysis = settings;

  if (options.ratings_path.empty() && options.reveals_path.empty()) {
    throw ConfigError("analyze requires --ratings and/or --reveals");
  }
  std::vector<Condition> conditions;
  if (options.condition == "both") {
    conditions = {Condition::ConfidenceSampling, Condition::UniformSampling};
  } else {
    conditions = {parse_condition(options.condition)};
  }

  const fs::path out_dir = prepare_out_dir(common.out_dir);
  for (const Condition condition : conditions) {
    if (!options.ratings_path.empty()) {
      analyze_ratings(out_dir, options.ratings_path, condition, settings, config.seed);
    }
    if (!options.reveals_path.empty()) {
      analyze_reveals(out_dir, options.reveals_path, condition, settings, config.seed);
    }
  }
  write_run_artifacts(out_dir, config,
                      json{{"command", "analyze"},
                           {"ratings", options.ratings_path},
                           {"reveals", options.reveals_path},
                           {"condition", options.condition}});
  return 0;
}

struct CurveDef {
  const char* name;
  PolicyKind policy;
  CouplingMode coupling;
  bool vs_exposure;
};

constexpr CurveDef kCurveRegistry[] = {
    {"rational_independent_confidence", PolicyKind::Rational, CouplingMode::Independent,
     false},
    {"rational_exposure_coupled_confidence", PolicyKind::Rational,
     CouplingMode::ExposureCoupled, false},
    {"rational_confidence_coupled_confidence", PolicyKind::Rational,
     CouplingMode::ConfidenceCoupled, false},
    {"novelty_confidence", PolicyKind::Novelty, CouplingMode::Independent, false},
    {"info_gap_confidence", PolicyKind::InfoGap, CouplingMode::Independent, false},
    {"rational_independent_exposure", PolicyKind::Rational, CouplingMode::Independent,
     true},
    {"rational_exposure_coupled_exposure", PolicyKind::Rational,
     CouplingMode::ExposureCoupled, true},
    {"learning_progress_exposure", PolicyKind::LearningProgress,
     CouplingMode::Independent, true},
};

const CurveDef& find_curve(const std::string& name) {
  for (const CurveDef& def : kCurveRegistry) {
    if (name == def.name) return def;
  }
  std::string valid;
  for (const CurveDef& def : kCurveRegistry) {
    if (!valid.empty()) valid += ", ";
    valid += def.name;
  }
  throw ConfigError("unknown curve '" + name + "'; valid curves: " + valid);
}

int cmd_curves(const CommonOptions& common, const CurvesOptions& options) {
  const RunConfig config = resolve_config(common);
  if (options.resolution < 2) throw ConfigError("resolution must be at least 2");
  if (!(options.max_exposure > 0.0)) {
    throw ConfigError("max exposure must be positive");
  }
  std::vector<std::string> names = options.names;
  if (names.empty()) {
    for (const CurveDef& def : kCurveRegistry) names.emplace_back(def.name);
  }
  const fs::path out_dir = prepare_out_dir(common.out_dir);
  const std::size_t n = options.resolution;
  for (const std::string& name : names) {
    const CurveDef& def = find_curve(name);
    std::vector<double> grid(n);
    std::vector<std::pair<double, double>> points;
    if (def.vs_exposure) {
      for (std::size_t i = 0; i < n; ++i) {
        grid[i] = options.max_exposure * static_cast<double>(i) /
                  static_cast<double>(n - 1);
      }
      points = curiosity_vs_exposure(def.policy, def.coupling, grid,
                                     config.environment.growth);
    } else {
      // Stay strictly below c = 1, where the exposure-coupled form diverges.
      for (std::size_t i = 0; i < n; ++i) {
        grid[i] = static_cast<double>(i) / static_cast<double>(n);
      }
      points = curiosity_vs_confidence(def.policy, def.coupling, grid);
    }
    std::ostringstream csv;
    write_row(csv, {"x", "curiosity"});
    for (const auto& [x, omega] : points) {
      write_row(csv, {format_double(x), format_double(omega)});
    }
    write_text_file(out_dir / ("curve_" + name + ".csv"), csv.str());
  }
  json manifest_names = json::array();
  for (const std::string& name : names) manifest_names.push_back(name);
  write_run_artifacts(out_dir, config,
                      json{{"command", "curves"},
                           {"curves", manifest_names},
                           {"resolution", options.resolution},
                           {"max_exposure", options.max_exposure}});
  std::cout << "curves: wrote " << names.size() << " curve files at resolution "
            << options.resolution << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulation and analysis toolkit for curiosity-driven exploration"};
  app.require_subcommand(1);

  CommonOptions common;
  AnalyzeOptions analyze_options;
  CurvesOptions curves_options;
  std::string compare_format = "csv";

  const auto add_common = [&common](CLI::App* cmd) {
    cmd->add_option("--config", common.config_path, "JSON configuration file");
    cmd->add_option("--seed", common.seed, "Override the configured seed");
    cmd->add_option("--out", common.out_dir, "Output directory (default: out)");
  };

  CLI::App* simulate = app.add_subcommand("simulate", "Run one simulation");
  add_common(simulate);

  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Benchmark policies over seeded replications");
  add_common(compare_cmd);
  compare_cmd->add_option("--format", compare_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* experiment = app.add_subcommand("experiment", "Run the in-silico experiment");
  add_common(experiment);

  CLI::App* analyze = app.add_subcommand("analyze", "Fit and bin experiment datasets");
  add_common(analyze);
  analyze->add_option("--ratings", analyze_options.ratings_path,
                      "Main-round ratings CSV");
  analyze->add_option("--reveals", analyze_options.reveals_path,
                      "Bonus-round reveals CSV");
  analyze->add_option("--condition", analyze_options.condition, "Condition filter")
      ->check(CLI::IsMember({"confidence", "uniform", "both"}));
  analyze->add_option("--permutations", analyze_options.permutations,
                      "Permutation count override");
  analyze->add_option("--bin-width", analyze_options.bin_width, "Bin width override");
  analyze->add_option("--alpha", analyze_options.alpha, "Significance level override");
  analyze
      ->add_option("--confidence-scale", analyze_options.confidence_scale,
                   "Scale of the confidence column")
      ->check(CLI::IsMember({"unit", "percent"}));

  CLI::App* curves = app.add_subcommand("curves", "Emit theoretical curiosity curves");
  add_common(curves);
  curves->add_option("--curve", curves_options.names,
                     "Curve name (repeatable; default: all)");
  curves->add_option("--resolution", curves_options.resolution,
                     "Grid points per curve (default: 1001)");
  curves->add_option("--max-exposure", curves_options.max_exposure,
                     "Upper end of exposure grids (default: 10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::CallForAllHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 1;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(common);
    if (compare_cmd->parsed()) return cmd_compare(common, compare_format);
    if (experiment->parsed()) return cmd_experiment(common);
    if (analyze->parsed()) return cmd_analyze(common, analyze_options);
    if (curves->parsed()) return cmd_curves(common, curves_options);
  } catch (const IoError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
