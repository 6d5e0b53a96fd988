#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "boatune/numerics.hpp"
#include "boatune/search_space.hpp"

namespace boatune::control {

using numerics::Complex;
using numerics::Matrix;
using numerics::Spectrum;

class ControlError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPlant : public ControlError {
 public:
  using ControlError::ControlError;
};

class InvalidParams : public ControlError {
 public:
  using ControlError::ControlError;
};

/// Damping ratio is undefined for an eigenvalue at the origin.
class ZeroEigenvalue : public ControlError {
 public:
  using ControlError::ControlError;
};

/**
 * Linearized single-input plant xdot = A x + b u, plus the washout filter
 * that feeds the lead-lag controller.
 *
 * Indices are zero-based here; the JSON file format uses one-based indices.
 */
struct StateSpacePlant {
  Matrix a;
  Matrix b;  // n x 1
  double washout_time_constant = 3.0;
  std::size_t input_row = 0;
  std::size_t sensed_state = 0;

  std::size_t order() const { return a.rows(); }

  /// Throws InvalidPlant when a shape, index or time constant is out of range.
  void validate() const;
};

/// The fourth-order linearized plant with T_w = 3, u entering state 4 with
/// gain 1000 and the washout sensing state 2.
StateSpacePlant paper_plant();

StateSpacePlant parse_plant_json(const std::string& text);
StateSpacePlant load_plant(const std::filesystem::path& path);
std::string plant_to_json(const StateSpacePlant& plant);

/// Lead-lag compensator K (1 + s T1) / (1 + s T2).
struct LeadLagParams {
  double kc = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;

  std::array<double, 3> to_array() const { return {kc, t1, t2}; }
  /// Expects exactly three entries ordered (kc, t1, t2).
  static LeadLagParams from_vector(std::span<const double> x);

  friend bool operator==(const LeadLagParams&, const LeadLagParams&) = default;
};

/// K_c in [1, 50], T1 in [0.1, 1.0], T2 in [0.01, 0.1].
SearchSpace lead_lag_search_space();

/**
 * Closed-loop state matrix over z = [x, x_w, u].
 *
 * Rows 0..n-1 are the plant with b in the last column. Row n is the washout
 * state: the sensed plant row (and its b entry) with -1/T_w on the diagonal.
 * Row n+1 is the compensator: u' = (K T1/T2) x_w' + (K/T2) x_w - u/T2.
 */
Matrix assemble_closed_loop(const StateSpacePlant& plant, const LeadLagParams& params);

/// zeta = -Re(lambda) / |lambda|. Negative for unstable modes.
double damping_ratio(const Complex& lambda);

double min_damping_ratio(const Spectrum& spectrum);

/// Closed-loop minimum damping ratio; the quantity to maximize.
double objective(const StateSpacePlant& plant, const LeadLagParams& params);

}  // namespace boatune::control
