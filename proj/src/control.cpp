#include "boatune/control.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace boatune::control {

void StateSpacePlant::validate() const {
  const std::size_t n = a.rows();
  if (n == 0 || !a.is_square()) throw InvalidPlant("plant state matrix must be square and non-empty");
  if (b.rows() != n || b.cols() != 1) throw InvalidPlant("plant input matrix must be n x 1");
  if (!a.all_finite() || !b.all_finite()) throw InvalidPlant("plant matrices must be finite");
  if (!(washout_time_constant > 0.0) || !std::isfinite(washout_time_constant)) {
    throw InvalidPlant("washout time constant must be positive");
  }
  if (input_row >= n) throw InvalidPlant("input_row is not a valid state index");
  if (sensed_state >= n) throw InvalidPlant("sensed_state is not a valid state index");
  if (b(input_row, 0) == 0.0) throw InvalidPlant("b has no entry at input_row");
}

StateSpacePlant paper_plant() {
  StateSpacePlant plant;
  plant.a = Matrix{{0.0, 377.0, 0.0, 0.0},
                   {-0.0587, 0.0, -0.1303, 0.0},
                   {-0.0899, 0.0, -0.1956, 0.1289},
                   {95.605, 0.0, -816.0862, -20.0}};
  plant.b = Matrix(4, 1, {0.0, 0.0, 0.0, 1000.0});
  plant.washout_time_constant = 3.0;
  plant.input_row = 3;
  plant.sensed_state = 1;
  return plant;
}

LeadLagParams LeadLagParams::from_vector(std::span<const double> x) {
  if (x.size() != 3) throw InvalidParams("lead-lag parameters need exactly 3 entries");
  return {x[0], x[1], x[2]};
}

SearchSpace lead_lag_search_space() {
  return SearchSpace({1.0, 0.1, 0.01}, {50.0, 1.0, 0.1}, {"kc", "t1", "t2"});
}

Matrix assemble_closed_loop(const StateSpacePlant& plant, const LeadLagParams& params) {
  if (!(params.t2 > 0.0)) throw InvalidParams("lag time constant t2 must be positive");
  if (!std::isfinite(params.kc) || !std::isfinite(params.t1) || !std::isfinite(params.t2)) {
    throw InvalidParams("lead-lag parameters must be finite");
  }

  const std::size_t n = plant.order();
  const std::size_t washout = n;
  const std::size_t input = n + 1;
  Matrix ac(n + 2, n + 2);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) ac(i, j) = plant.a(i, j);
    ac(i, input) = plant.b(i, 0);
  }

  // x_w' = x_s' - x_w / T_w
  const std::size_t s = plant.sensed_state;
  for (std::size_t j = 0; j < n; ++j) ac(washout, j) = plant.a(s, j);
  ac(washout, washout) = -1.0 / plant.washout_time_constant;
  ac(washout, input) = plant.b(s, 0);

  // u' = (K T1 / T2) x_w' + (K / T2) x_w - u / T2
  const double lead = params.kc * params.t1 / params.t2;
  for (std::size_t j = 0; j < n + 2; ++j) ac(input, j) = lead * ac(washout, j);
  ac(input, washout) += params.kc / params.t2;
  ac(input, input) -= 1.0 / params.t2;

  if (!ac.all_finite()) throw InvalidParams("closed-loop matrix has non-finite entries");
  return ac;
}

double damping_ratio(const Complex& lambda) {
  const double magnitude = std::hypot(lambda.real(), lambda.imag());
  if (magnitude == 0.0) throw ZeroEigenvalue("damping ratio is undefined at lambda = 0");
  return -lambda.real() / magnitude;
}

double min_damping_ratio(const Spectrum& spectrum) {
  if (spectrum.empty()) throw ControlError("min_damping_ratio of an empty spectrum");
  double zeta = std::numeric_limits<double>::infinity();
  for (const auto& lambda : spectrum) zeta = std::min(zeta, damping_ratio(lambda));
  return zeta;
}

double objective(const StateSpacePlant& plant, const LeadLagParams& params) {
  return min_damping_ratio(numerics::eigenvalues(assemble_closed_loop(plant, params)));
}

}  // namespace boatune::control
