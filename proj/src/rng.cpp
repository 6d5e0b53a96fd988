#include <stdexcept>

#include "boatune/optimizers.hpp"

namespace boatune::optim {

std::size_t Rng::index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Rng::index needs n > 0");
  const auto i = static_cast<std::size_t>(uniform() * static_cast<double>(n));
  return i < n ? i : n - 1;
}

ObjectiveError::ObjectiveError(const std::string& what, std::vector<double> position)
    : OptimizerError(what), position_(std::move(position)) {}

}  // namespace boatune::optim
