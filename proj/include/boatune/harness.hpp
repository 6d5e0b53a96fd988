#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "boatune/control.hpp"
#include "boatune/optimizers.hpp"
#include "boatune/search_space.hpp"

namespace boatune::harness {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A single (algorithm, seed) run failed.
class RunFailure : public std::runtime_error {
 public:
  RunFailure(std::string algorithm, std::uint64_t seed, const std::string& cause);
  const std::string& algorithm() const { return algorithm_; }
  std::uint64_t seed() const { return seed_; }

 private:
  std::string algorithm_;
  std::uint64_t seed_;
};

struct ExperimentConfig {
  std::filesystem::path plant_file;
  SearchSpace bounds = control::lead_lag_search_space();
  std::optional<optim::BoaConfig> boa;
  std::optional<optim::GaConfig> ga;
  std::optional<optim::DeConfig> de;
  std::vector<std::uint64_t> seeds;
  std::filesystem::path output_dir;

  /// Throws ConfigError.
  void validate() const;
};

/// Relative paths in the document are resolved against base_dir.
ExperimentConfig parse_experiment_config(const std::string& text,
                                         const std::filesystem::path& base_dir);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// Published settings for all three algorithms over seeds 1..20.
ExperimentConfig paper_experiment_config();

struct AlgorithmSummary {
  std::string algorithm;
  std::vector<std::uint64_t> seeds;
  std::vector<double> final_objectives;  // one per seed, seed order
  double best_final = 0.0;
  double median_final = 0.0;
  double worst_final = 0.0;
  std::uint64_t best_seed = 0;
  control::LeadLagParams best_params;
  numerics::Spectrum best_spectrum;  // recomputed from best_params
  double best_zeta_min = 0.0;        // recomputed from best_spectrum
  std::vector<double> median_trace;
  std::vector<std::size_t> generations_to_within_1pct;  // one per seed
  std::size_t evaluations_per_run = 0;
};

struct ComparisonReport {
  std::vector<AlgorithmSummary> algorithms;

  const AlgorithmSummary* find(const std::string& algorithm) const;
  std::string to_json() const;
  std::string to_table() const;
};

struct ExperimentResult {
  std::vector<optim::RunRecord> runs;  // algorithm-major, then seed order
  ComparisonReport report;
};

/// Runs every (algorithm, seed) pair; independent runs execute in parallel.
std::vector<optim::RunRecord> run_all(const ExperimentConfig& config,
                                      const control::StateSpacePlant& plant);

ComparisonReport summarize(std::span<const optim::RunRecord> runs,
                           const control::StateSpacePlant& plant);

/// Loads the plant, runs everything and writes one CSV per run plus
/// report.json and report.txt into config.output_dir.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// `generation,best_objective` with one row per trace entry.
std::string convergence_csv(const optim::RunRecord& run);
std::string csv_file_name(const optim::RunRecord& run);

/// First generation whose best is within `fraction` (relative) of the final value.
std::size_t generations_to_within(std::span<const double> trace, double fraction);

double median(std::vector<double> values);

// ---- deterministic table verification ------------------------------------

struct PublishedResult {
  std::string algorithm;
  control::LeadLagParams params;
  std::vector<numerics::Complex> eigenvalues;
  double zeta_min = 0.0;
};

/// Published controller parameters with their closed-loop spectra and objectives.
const std::vector<PublishedResult>& published_results();

inline constexpr double kEigenvalueTolerance = 1e-2;
inline constexpr double kZetaTolerance = 1e-3;

struct TableCheck {
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerificationSummary {
  std::vector<TableCheck> checks;

  bool all_passed() const;
  std::string to_text() const;
};

VerificationSummary verify_paper_tables(const control::StateSpacePlant& plant);

}  // namespace boatune::harness
