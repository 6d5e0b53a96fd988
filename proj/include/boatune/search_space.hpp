#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace boatune {

/// Axis-aligned box of admissible decision vectors.
class SearchSpace {
 public:
  /// Throws std::invalid_argument unless lower[i] < upper[i] for every axis
  /// and all three vectors have the same non-zero length.
  SearchSpace(std::vector<double> lower, std::vector<double> upper,
              std::vector<std::string> dimension_names = {});

  std::size_t dimension() const { return lower_.size(); }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }
  const std::vector<std::string>& dimension_names() const { return names_; }

  double lower(std::size_t i) const { return lower_[i]; }
  double upper(std::size_t i) const { return upper_[i]; }
  double width(std::size_t i) const { return upper_[i] - lower_[i]; }

  bool contains(std::span<const double> x) const;
  void clamp(std::span<double> x) const;

  friend bool operator==(const SearchSpace&, const SearchSpace&) = default;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<std::string> names_;
};

}  // namespace boatune
