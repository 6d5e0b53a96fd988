#include "boatune/search_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace boatune {

SearchSpace::SearchSpace(std::vector<double> lower, std::vector<double> upper,
                         std::vector<std::string> dimension_names)
    : lower_(std::move(lower)), upper_(std::move(upper)), names_(std::move(dimension_names)) {
  if (lower_.empty()) throw std::invalid_argument("search space needs at least one dimension");
  if (lower_.size() != upper_.size()) {
    throw std::invalid_argument("search space lower/upper length mismatch");
  }
  if (names_.empty()) {
    for (std::size_t i = 0; i < lower_.size(); ++i) names_.push_back("x" + std::to_string(i + 1));
  }
  if (names_.size() != lower_.size()) {
    throw std::invalid_argument("search space names length mismatch");
  }
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i]) || !(lower_[i] < upper_[i])) {
      throw std::invalid_argument("search space bound for '" + names_[i] +
                                  "' must satisfy finite lower < upper");
    }
  }
}

bool SearchSpace::contains(std::span<const double> x) const {
  if (x.size() != dimension()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= lower_[i] && x[i] <= upper_[i])) return false;
  }
  return true;
}

void SearchSpace::clamp(std::span<double> x) const {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], lower_[i], upper_[i]);
}

}  // namespace boatune
