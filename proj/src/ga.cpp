#include <algorithm>
#include <cmath>

#include "boatune/optimizers.hpp"
#include "population.hpp"

namespace boatune::optim {
namespace {

std::size_t tournament(const std::vector<double>& values, Rng& rng) {
  const std::size_t a = rng.index(values.size());
  const std::size_t b = rng.index(values.size());
  if (values[a] != values[b]) return values[a] > values[b] ? a : b;
  return std::min(a, b);
}

// BLX-alpha: each child gene is uniform on the parents' interval widened by
// alpha times its length on both sides.
std::vector<double> blend(const std::vector<double>& p1, const std::vector<double>& p2,
                          double alpha, const SearchSpace& space, Rng& rng) {
  std::vector<double> child(p1.size());
  for (std::size_t d = 0; d < p1.size(); ++d) {
    const double lo = std::min(p1[d], p2[d]);
    const double hi = std::max(p1[d], p2[d]);
    const double spread = alpha * (hi - lo);
    child[d] = rng.uniform(lo - spread, hi + spread);
  }
  space.clamp(child);
  return child;
}

void mutate(std::vector<double>& x, double probability, const SearchSpace& space, Rng& rng) {
  for (std::size_t d = 0; d < x.size(); ++d) {
    if (rng.uniform() < probability) x[d] = rng.uniform(space.lower(d), space.upper(d));
  }
}

}  // namespace

void GaConfig::validate() const {
  detail::check_probability(mutation_probability, "mutation_probability");
  detail::check_probability(crossover_probability, "crossover_probability");
  if (!(crossover_coefficient >= 0.0) || !std::isfinite(crossover_coefficient)) {
    throw InvalidConfig("crossover_coefficient must be non-negative");
  }
  detail::check_population(population_size, 2);
}

RunRecord run_ga(const Objective& objective, const SearchSpace& space, const GaConfig& config,
                 const GenerationObserver& observer) {
  config.validate();
  Rng rng(config.seed);
  const std::size_t n = config.population_size;

  RunRecord record;
  record.algorithm = "ga";
  record.seed = config.seed;
  record.best_objective_per_generation.reserve(config.generations + 1);

  std::vector<std::vector<double>> population(n);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    population[i] = detail::random_position(space, rng);
    values[i] = detail::evaluate(objective, population[i]);
    ++record.evaluation_count;
  }
  std::size_t elite = detail::best_index(values);
  record.best_objective_per_generation.push_back(values[elite]);
  detail::notify(observer, 0, population, values, values[elite]);

  std::vector<std::vector<double>> offspring;
  std::vector<double> offspring_values;
  offspring.reserve(n);
  offspring_values.reserve(n);
  for (std::size_t gen = 1; gen <= config.generations; ++gen) {
    offspring.clear();
    offspring_values.clear();
    offspring.push_back(population[elite]);
    offspring_values.push_back(values[elite]);

    while (offspring.size() < n) {
      const auto& p1 = population[tournament(values, rng)];
      const auto& p2 = population[tournament(values, rng)];
      std::vector<double> c1 = p1;
      std::vector<double> c2 = p2;
      if (rng.uniform() < config.crossover_probability) {
        c1 = blend(p1, p2, config.crossover_coefficient, space, rng);
        c2 = blend(p1, p2, config.crossover_coefficient, space, rng);
      }
      mutate(c1, config.mutation_probability, space, rng);
      mutate(c2, config.mutation_probability, space, rng);

      offspring_values.push_back(detail::evaluate(objective, c1));
      offspring.push_back(std::move(c1));
      ++record.evaluation_count;
      if (offspring.size() < n) {
        offspring_values.push_back(detail::evaluate(objective, c2));
        offspring.push_back(std::move(c2));
        ++record.evaluation_count;
      }
    }

    population.swap(offspring);
    values.swap(offspring_values);
    elite = detail::best_index(values);
    record.best_objective_per_generation.push_back(values[elite]);
    detail::notify(observer, gen, population, values, values[elite]);
  }

  record.final_best_position = population[elite];
  record.final_best_objective = values[elite];
  return record;
}

}  // namespace boatune::optim
