#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "boatune/search_space.hpp"

namespace boatune::optim {

/// Maximization objective over a bounded box.
using Objective = std::function<double(std::span<const double>)>;

class OptimizerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidConfig : public OptimizerError {
 public:
  using OptimizerError::OptimizerError;
};

class PopulationTooSmall : public InvalidConfig {
 public:
  using InvalidConfig::InvalidConfig;
};

class NegativeIntensity : public OptimizerError {
 public:
  using OptimizerError::OptimizerError;
};

/// An objective evaluation threw or returned a non-finite value.
class ObjectiveError : public OptimizerError {
 public:
  ObjectiveError(const std::string& what, std::vector<double> position);
  const std::vector<double>& position() const { return position_; }

 private:
  std::vector<double> position_;
};

/**
 * Per-run random source. Draws are produced from the raw 64-bit engine output
 * rather than the standard distributions so sequences are identical across
 * standard library implementations.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform in {0, ..., n-1}; n must be positive.
  std::size_t index(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

struct Butterfly {
  std::vector<double> position;
  double intensity = 0.0;
  double fragrance = 0.0;
  double objective_value = 0.0;
};

struct BoaConfig {
  double sensory_modality_c = 0.01;
  double power_exponent_a = 0.1;
  double switch_probability_p = 0.8;
  std::size_t population_size = 50;
  std::size_t generations = 200;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Real-coded GA: binary tournament, blend crossover, uniform mutation, one elite.
struct GaConfig {
  double mutation_probability = 0.05;
  double crossover_probability = 0.9;
  double crossover_coefficient = 0.5;
  std::size_t population_size = 50;
  std::size_t generations = 200;
  std::uint64_t seed = 0;

  void validate() const;
};

/// DE/rand/1/bin.
struct DeConfig {
  double crossover_rate = 0.9;
  double differential_weight = 0.5;
  std::size_t population_size = 50;
  std::size_t generations = 200;
  std::uint64_t seed = 0;

  void validate() const;
};

struct RunRecord {
  std::string algorithm;
  std::uint64_t seed = 0;
  /// Entry 0 is the initial population; entry g is the best after generation g.
  std::vector<double> best_objective_per_generation;
  std::vector<double> final_best_position;
  double final_best_objective = 0.0;
  std::size_t evaluation_count = 0;
  // BOA move counters; zero for the other algorithms.
  std::size_t global_steps = 0;
  std::size_t local_steps = 0;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

struct GenerationSnapshot {
  std::size_t generation = 0;
  std::span<const std::vector<double>> positions;
  std::span<const double> objective_values;
  double best_objective = 0.0;
};

/// Called once after initialization and once after every generation.
using GenerationObserver = std::function<void(const GenerationSnapshot&)>;

/// f = c * I^a
double fragrance(double intensity, double c, double a);

/// max(eps, value - floor_shift); floor_shift is the population minimum minus one.
double intensity_from_objective(double objective_value, double floor_shift);

/// Intensities for a whole population, shifted so the worst member gets 1.
std::vector<double> population_intensities(std::span<const double> objective_values);

/// x + (r^2 g* - x) f, clamped to the box.
std::vector<double> boa_global_step(std::span<const double> x, std::span<const double> best,
                                    double fragrance, double r, const SearchSpace& space);

/// x + (r^2 x_j - x_k) f, clamped to the box.
std::vector<double> boa_local_step(std::span<const double> x, std::span<const double> x_j,
                                   std::span<const double> x_k, double fragrance, double r,
                                   const SearchSpace& space);

RunRecord run_boa(const Objective& objective, const SearchSpace& space, const BoaConfig& config,
                  const GenerationObserver& observer = {});

RunRecord run_ga(const Objective& objective, const SearchSpace& space, const GaConfig& config,
                 const GenerationObserver& observer = {});

RunRecord run_de(const Objective& objective, const SearchSpace& space, const DeConfig& config,
                 const GenerationObserver& observer = {});

}  // namespace boatune::optim
