#pragma once

#include <cmath>
#include <exception>
#include <string>
#include <vector>

#include "boatune/optimizers.hpp"

namespace boatune::optim::detail {

inline double evaluate(const Objective& objective, const std::vector<double>& x) {
  double value = 0.0;
  try {
    value = objective(x);
  } catch (const std::exception& e) {
    throw ObjectiveError(std::string("objective failed: ") + e.what(), x);
  }
  if (!std::isfinite(value)) throw ObjectiveError("objective returned a non-finite value", x);
  return value;
}

inline std::vector<double> random_position(const SearchSpace& space, Rng& rng) {
  std::vector<double> x(space.dimension());
  for (std::size_t d = 0; d < x.size(); ++d) x[d] = rng.uniform(space.lower(d), space.upper(d));
  return x;
}

/// Index of the first maximum.
inline std::size_t best_index(const std::vector<double>& values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

inline void check_population(std::size_t population_size, std::size_t minimum) {
  if (population_size < minimum) {
    throw InvalidConfig("population_size must be at least " + std::to_string(minimum));
  }
}

inline void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidConfig(std::string(name) + " must lie in [0, 1]");
}

inline void notify(const GenerationObserver& observer, std::size_t generation,
                   const std::vector<std::vector<double>>& positions,
                   const std::vector<double>& values, double best) {
  if (observer) observer({generation, positions, values, best});
}

}  // namespace boatune::optim::detail
