#include <cmath>

#include "boatune/optimizers.hpp"
#include "population.hpp"

namespace boatune::optim {

void DeConfig::validate() const {
  detail::check_probability(crossover_rate, "crossover_rate");
  if (!(differential_weight >= 0.0) || !std::isfinite(differential_weight)) {
    throw InvalidConfig("differential_weight must be non-negative");
  }
  if (population_size < 4) throw PopulationTooSmall("DE/rand/1/bin needs population_size >= 4");
}

RunRecord run_de(const Objective& objective, const SearchSpace& space, const DeConfig& config,
                 const GenerationObserver& observer) {
  config.validate();
  Rng rng(config.seed);
  const std::size_t n = config.population_size;
  const std::size_t dim = space.dimension();

  RunRecord record;
  record.algorithm = "de";
  record.seed = config.seed;
  record.best_objective_per_generation.reserve(config.generations + 1);

  std::vector<std::vector<double>> population(n);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    population[i] = detail::random_position(space, rng);
    values[i] = detail::evaluate(objective, population[i]);
    ++record.evaluation_count;
  }
  std::size_t best = detail::best_index(values);
  record.best_objective_per_generation.push_back(values[best]);
  detail::notify(observer, 0, population, values, values[best]);

  auto next = population;
  auto next_values = values;
  std::vector<double> trial(dim);
  for (std::size_t gen = 1; gen <= config.generations; ++gen) {
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r1 = 0;
      std::size_t r2 = 0;
      std::size_t r3 = 0;
      do r1 = rng.index(n); while (r1 == i);
      do r2 = rng.index(n); while (r2 == i || r2 == r1);
      do r3 = rng.index(n); while (r3 == i || r3 == r1 || r3 == r2);
      const std::size_t forced = rng.index(dim);

      const auto& target = population[i];
      for (std::size_t d = 0; d < dim; ++d) {
        const bool take = rng.uniform() < config.crossover_rate || d == forced;
        if (!take) {
          trial[d] = target[d];
          continue;
        }
        double v = population[r1][d] +
                   config.differential_weight * (population[r2][d] - population[r3][d]);
        // Midpoint between the violated bound and the target's coordinate.
        if (v < space.lower(d)) v = 0.5 * (space.lower(d) + target[d]);
        if (v > space.upper(d)) v = 0.5 * (space.upper(d) + target[d]);
        trial[d] = v;
      }

      const double trial_value = detail::evaluate(objective, trial);
      ++record.evaluation_count;
      if (trial_value >= values[i]) {
        next[i] = trial;
        next_values[i] = trial_value;
      } else {
        next[i] = target;
        next_values[i] = values[i];
      }
    }
    population.swap(next);
    values.swap(next_values);
    best = detail::best_index(values);
    record.best_objective_per_generation.push_back(values[best]);
    detail::notify(observer, gen, population, values, values[best]);
  }

  record.final_best_position = population[best];
  record.final_best_objective = values[best];
  return record;
}

}  // namespace boatune::optim
