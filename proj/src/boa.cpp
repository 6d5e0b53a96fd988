#include <algorithm>
#include <cmath>
#include <limits>

#include "boatune/optimizers.hpp"
#include "population.hpp"

namespace boatune::optim {

void BoaConfig::validate() const {
  if (!(sensory_modality_c > 0.0 && sensory_modality_c <= 1.0)) {
    throw InvalidConfig("sensory_modality_c must lie in (0, 1]");
  }
  if (!(power_exponent_a > 0.0 && power_exponent_a <= 1.0)) {
    throw InvalidConfig("power_exponent_a must lie in (0, 1]");
  }
  detail::check_probability(switch_probability_p, "switch_probability_p");
  // Local steps draw two partners, so a single butterfly is still well defined.
  detail::check_population(population_size, 1);
}

double fragrance(double intensity, double c, double a) {
  if (intensity < 0.0 || std::isnan(intensity)) {
    throw NegativeIntensity("stimulus intensity must be non-negative");
  }
  if (!(c > 0.0)) throw std::invalid_argument("sensory modality must be positive");
  if (!(a > 0.0 && a <= 1.0)) throw std::invalid_argument("power exponent must lie in (0, 1]");
  return c * std::pow(intensity, a);
}

double intensity_from_objective(double objective_value, double floor_shift) {
  constexpr double kMinIntensity = 1e-12;
  return std::max(kMinIntensity, objective_value - floor_shift);
}

std::vector<double> population_intensities(std::span<const double> objective_values) {
  if (objective_values.empty()) return {};
  const double floor_shift =
      *std::min_element(objective_values.begin(), objective_values.end()) - 1.0;
  std::vector<double> out;
  out.reserve(objective_values.size());
  for (double v : objective_values) out.push_back(intensity_from_objective(v, floor_shift));
  return out;
}

std::vector<double> boa_global_step(std::span<const double> x, std::span<const double> best,
                                    double fragrance, double r, const SearchSpace& space) {
  if (x.size() != best.size() || x.size() != space.dimension()) {
    throw std::invalid_argument("boa_global_step: dimension mismatch");
  }
  const double r2 = r * r;
  std::vector<double> out(x.size());
  for (std::size_t d = 0; d < x.size(); ++d) out[d] = x[d] + (r2 * best[d] - x[d]) * fragrance;
  space.clamp(out);
  return out;
}

std::vector<double> boa_local_step(std::span<const double> x, std::span<const double> x_j,
                                   std::span<const double> x_k, double fragrance, double r,
                                   const SearchSpace& space) {
  if (x.size() != x_j.size() || x.size() != x_k.size() || x.size() != space.dimension()) {
    throw std::invalid_argument("boa_local_step: dimension mismatch");
  }
  const double r2 = r * r;
  std::vector<double> out(x.size());
  for (std::size_t d = 0; d < x.size(); ++d) out[d] = x[d] + (r2 * x_j[d] - x_k[d]) * fragrance;
  space.clamp(out);
  return out;
}

RunRecord run_boa(const Objective& objective, const SearchSpace& space, const BoaConfig& config,
                  const GenerationObserver& observer) {
  config.validate();
  Rng rng(config.seed);
  const std::size_t n = config.population_size;

  RunRecord record;
  record.algorithm = "boa";
  record.seed = config.seed;
  record.best_objective_per_generation.reserve(config.generations + 1);

  std::vector<Butterfly> swarm(n);
  std::vector<std::vector<double>> positions(n);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    positions[i] = detail::random_position(space, rng);
    values[i] = detail::evaluate(objective, positions[i]);
    ++record.evaluation_count;
  }

  std::size_t best = detail::best_index(values);
  std::vector<double> best_position = positions[best];
  double best_value = values[best];
  record.best_objective_per_generation.push_back(best_value);
  detail::notify(observer, 0, positions, values, best_value);

  std::vector<std::vector<double>> next(n);
  for (std::size_t gen = 1; gen <= config.generations; ++gen) {
    const auto intensities = population_intensities(values);
    for (std::size_t i = 0; i < n; ++i) {
      swarm[i].position = positions[i];
      swarm[i].objective_value = values[i];
      swarm[i].intensity = intensities[i];
      swarm[i].fragrance =
          fragrance(intensities[i], config.sensory_modality_c, config.power_exponent_a);
    }

    for (std::size_t i = 0; i < n; ++i) {
      const Butterfly& b = swarm[i];
      if (rng.uniform() < config.switch_probability_p) {
        const double r = rng.uniform();
        next[i] = boa_global_step(b.position, best_position, b.fragrance, r, space);
        ++record.global_steps;
      } else {
        const std::size_t j = rng.index(n);
        const std::size_t k = rng.index(n);
        const double r = rng.uniform();
        next[i] = boa_local_step(b.position, swarm[j].position, swarm[k].position, b.fragrance,
                                 r, space);
        ++record.local_steps;
      }
    }

    // Every move is accepted; only the incumbent best is elitist.
    for (std::size_t i = 0; i < n; ++i) {
      positions[i] = std::move(next[i]);
      values[i] = detail::evaluate(objective, positions[i]);
      ++record.evaluation_count;
      if (values[i] > best_value) {
        best_value = values[i];
        best_position = positions[i];
      }
    }
    record.best_objective_per_generation.push_back(best_value);
    detail::notify(observer, gen, positions, values, best_value);
  }

  record.final_best_position = best_position;
  record.final_best_objective = best_value;
  return record;
}

}  // namespace boatune::optim
