#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "boatune/control.hpp"
#include "boatune/harness.hpp"
#include "test_support.hpp"

namespace boatune::control {
namespace {

TEST(AssembleClosedLoop, MatchesDisplayedMatrixEntryByEntry) {
  const double k = 18.3998;
  const double t1 = 0.2619;
  const double t2 = 0.1;
  const Matrix ac = assemble_closed_loop(paper_plant(), {k, t1, t2});
  ASSERT_EQ(ac.rows(), 6u);
  ASSERT_EQ(ac.cols(), 6u);

  // Symbolic entries evaluated by hand.
  const Matrix expected{
      {0.0, 377.0, 0.0, 0.0, 0.0, 0.0},
      {-0.0587, 0.0, -0.1303, 0.0, 0.0, 0.0},
      {-0.0899, 0.0, -0.1956, 0.1289, 0.0, 0.0},
      {95.605, 0.0, -816.0862, -20.0, 0.0, 1000.0},
      {-0.0587, 0.0, -0.1303, 0.0, -1.0 / 3.0, 0.0},
      {-0.0587 * k * t1 / t2, 0.0, -0.1303 * k * t1 / t2, 0.0, k / t2 - k * t1 / (3.0 * t2),
       -1.0 / t2},
  };
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      EXPECT_NEAR(ac(i, j), expected(i, j), 1e-12 * (1.0 + std::abs(expected(i, j))))
          << "entry (" << i + 1 << "," << j + 1 << ")";
    }
  }
  EXPECT_DOUBLE_EQ(ac(5, 5), -10.0);
  EXPECT_DOUBLE_EQ(ac(4, 4), -1.0 / 3.0);
  EXPECT_EQ(ac(3, 5), 1000.0);
}

TEST(AssembleClosedLoop, ZeroGainDecouplesController) {
  const Matrix ac = assemble_closed_loop(paper_plant(), {0.0, 0.5, 0.1});
  for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(ac(5, j), 0.0) << j;
  EXPECT_DOUBLE_EQ(ac(5, 5), -10.0);
}

TEST(AssembleClosedLoop, GaParamsReproducePublishedSpectrum) {
  const auto& ga = harness::published_results().at(0);
  ASSERT_EQ(ga.algorithm, "GA");
  const auto s = numerics::eigenvalues(assemble_closed_loop(paper_plant(), ga.params));
  const Spectrum expected(ga.eigenvalues);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_NEAR(s[i].real(), expected[i].real(), 1e-2) << i;
    EXPECT_NEAR(s[i].imag(), expected[i].imag(), 1e-2) << i;
  }
}

TEST(AssembleClosedLoop, Errors) {
  EXPECT_THROW(assemble_closed_loop(paper_plant(), {10.0, 0.5, 0.0}), InvalidParams);
  EXPECT_THROW(assemble_closed_loop(paper_plant(), {10.0, 0.5, -0.1}), InvalidParams);
  EXPECT_THROW(assemble_closed_loop(paper_plant(), {1e308, 1e308, 1e-300}), InvalidParams);
}

TEST(AssembleClosedLoop, StructuralInvariants) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> kc(-100.0, 100.0);
  std::uniform_real_distribution<double> tc(1e-3, 5.0);
  const auto plant = paper_plant();
  const Matrix reference = assemble_closed_loop(plant, {1.0, 1.0, 1.0});
  for (int trial = 0; trial < 500; ++trial) {
    const LeadLagParams p{kc(gen), tc(gen), tc(gen)};
    const Matrix ac = assemble_closed_loop(plant, p);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(ac(i, j), reference(i, j));
    }
    EXPECT_EQ(ac(4, 4), -1.0 / plant.washout_time_constant);
    EXPECT_EQ(ac(5, 5), -1.0 / p.t2);
  }
}

TEST(AssembleClosedLoop, SensedStateInputCouplingPropagates) {
  // A plant whose sensed state is driven by u directly.
  StateSpacePlant plant;
  plant.a = Matrix{{-1.0, 0.0}, {0.0, -2.0}};
  plant.b = Matrix(2, 1, {0.0, 4.0});
  plant.washout_time_constant = 2.0;
  plant.input_row = 1;
  plant.sensed_state = 1;
  plant.validate();
  const LeadLagParams p{3.0, 0.5, 0.25};
  const Matrix ac = assemble_closed_loop(plant, p);
  // x_w' = -2 x2 - x_w / 2 + 4 u
  EXPECT_EQ(ac(2, 1), -2.0);
  EXPECT_EQ(ac(2, 2), -0.5);
  EXPECT_EQ(ac(2, 3), 4.0);
  // u' = 6 x_w' + 12 x_w - 4 u
  EXPECT_DOUBLE_EQ(ac(3, 1), -12.0);
  EXPECT_DOUBLE_EQ(ac(3, 2), 6.0 * -0.5 + 12.0);
  EXPECT_DOUBLE_EQ(ac(3, 3), 6.0 * 4.0 - 4.0);
}

TEST(DampingRatio, Examples) {
  EXPECT_NEAR(damping_ratio({-3.032, 5.5839}), 0.4772, 1e-4);
  EXPECT_EQ(damping_ratio({-1.0, 0.0}), 1.0);
  EXPECT_EQ(damping_ratio({0.0, 4.0}), 0.0);
  EXPECT_NEAR(damping_ratio({-2.6591, 4.9738}), 0.4715, 5e-4);
  EXPECT_LT(damping_ratio({0.2954, 4.9577}), 0.0);
  EXPECT_EQ(damping_ratio({2.0, 0.0}), -1.0);
  EXPECT_THROW(damping_ratio({0.0, 0.0}), ZeroEigenvalue);
}

TEST(DampingRatio, BothFormsAgree) {
  std::mt19937_64 gen(19);
  std::uniform_real_distribution<double> re(-50.0, -1e-6);
  std::uniform_real_distribution<double> im(-50.0, 50.0);
  for (int i = 0; i < 10000; ++i) {
    const Complex z(re(gen), im(gen));
    const double angle_form = std::cos(std::atan(z.imag() / -z.real()));
    EXPECT_NEAR(damping_ratio(z), angle_form, 1e-12);
  }
}

TEST(DampingRatio, ConjugateAndScaleInvariance) {
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> coord(-20.0, 20.0);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  for (int i = 0; i < 2000; ++i) {
    const Complex z(coord(gen), coord(gen));
    const double zeta = damping_ratio(z);
    EXPECT_EQ(zeta, damping_ratio(std::conj(z)));
    EXPECT_NEAR(damping_ratio(scale(gen) * z), zeta, 1e-12);
    EXPECT_GE(zeta, -1.0);
    EXPECT_LE(zeta, 1.0);
  }
}

TEST(MinDampingRatio, Examples) {
  EXPECT_EQ(min_damping_ratio(Spectrum({{-1.0, 0.0}, {-2.0, 0.0}, {-3.0, 0.0}})), 1.0);
  const double open_loop = min_damping_ratio(numerics::eigenvalues(paper_plant().a));
  // Independent evaluation at the unstable open-loop pair.
  EXPECT_NEAR(open_loop, -0.2954 / std::hypot(0.2954, 4.9577), 1e-4);
  EXPECT_LT(open_loop, 0.0);
  EXPECT_THROW(min_damping_ratio(Spectrum({{-1.0, 0.0}, {0.0, 0.0}})), ZeroEigenvalue);
  EXPECT_THROW(min_damping_ratio(Spectrum{}), ControlError);
}

TEST(MinDampingRatio, PositiveIffStable) {
  std::mt19937_64 gen(29);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto m = testing::random_matrix(1 + trial % 6, gen, -2.0, 1.0);
    const auto s = numerics::eigenvalues(m);
    const bool stable =
        std::all_of(s.begin(), s.end(), [](const Complex& z) { return z.real() < 0.0; });
    EXPECT_EQ(min_damping_ratio(s) > 0.0, stable);
  }
}

TEST(Objective, PublishedParameterTriples) {
  const auto plant = paper_plant();
  EXPECT_NEAR(objective(plant, {18.3998, 0.2619, 0.1}), 0.4772, 1e-3);
  EXPECT_NEAR(objective(plant, {18.1352, 0.2714, 0.1}), 0.4712, 1e-3);
  EXPECT_NEAR(objective(plant, {18.402, 0.2618, 0.1}), 0.4772, 1e-3);
  EXPECT_EQ(objective(plant, {18.402, 0.2618, 0.1}), objective(plant, {18.402, 0.2618, 0.1}));
}

TEST(SearchSpaceTest, LeadLagBounds) {
  const auto space = lead_lag_search_space();
  EXPECT_EQ(space.dimension(), 3u);
  EXPECT_EQ(space.lower(), (std::vector<double>{1.0, 0.1, 0.01}));
  EXPECT_EQ(space.upper(), (std::vector<double>{50.0, 1.0, 0.1}));
  EXPECT_TRUE(space.contains(std::vector<double>{18.4, 0.26, 0.1}));
  EXPECT_FALSE(space.contains(std::vector<double>{18.4, 0.26, 0.2}));
  EXPECT_THROW(SearchSpace({1.0}, {1.0}), std::invalid_argument);
  EXPECT_THROW(SearchSpace({1.0, 2.0}, {3.0}), std::invalid_argument);
}

TEST(PlantJson, LoadsPaperPlantWithOneBasedIndices) {
  const auto plant = load_plant(BOATUNE_DATA_DIR "/paper_plant.json");
  const auto reference = paper_plant();
  EXPECT_EQ(plant.a, reference.a);
  EXPECT_EQ(plant.b, reference.b);
  EXPECT_EQ(plant.washout_time_constant, 3.0);
  EXPECT_EQ(plant.sensed_state, 1u);
  EXPECT_EQ(plant.input_row, 3u);
}

TEST(PlantJson, RoundTrip) {
  const auto plant = paper_plant();
  const auto again = parse_plant_json(plant_to_json(plant));
  EXPECT_EQ(again.a, plant.a);
  EXPECT_EQ(again.b, plant.b);
  EXPECT_EQ(again.sensed_state, plant.sensed_state);
  EXPECT_EQ(again.input_row, plant.input_row);
}

TEST(PlantJson, RejectsInvalidDocuments) {
  const std::string good_tail = R"("washout_time_constant": 3.0, "sensed_state": 1, "input_row": 2})";
  const std::string a = R"({"a": [[0, 1], [-1, 0]], "b": [0, 5], )";
  EXPECT_NO_THROW(parse_plant_json(a + good_tail));
  EXPECT_THROW(parse_plant_json("{"), InvalidPlant);
  EXPECT_THROW(parse_plant_json(a + R"("extra": 1, )" + good_tail), InvalidPlant);
  EXPECT_THROW(parse_plant_json(R"({"a": [[0, 1], [-1]], "b": [0, 5], )" + good_tail),
               InvalidPlant);
  EXPECT_THROW(parse_plant_json(R"({"a": [[0, 1], [-1, 0]], "b": [0], )" + good_tail),
               InvalidPlant);
  EXPECT_THROW(
      parse_plant_json(a + R"("washout_time_constant": 0, "sensed_state": 1, "input_row": 2})"),
      InvalidPlant);
  EXPECT_THROW(
      parse_plant_json(a + R"("washout_time_constant": 3, "sensed_state": 0, "input_row": 2})"),
      InvalidPlant);
  EXPECT_THROW(
      parse_plant_json(a + R"("washout_time_constant": 3, "sensed_state": 1, "input_row": 3})"),
      InvalidPlant);
  // u must actually enter at input_row.
  EXPECT_THROW(
      parse_plant_json(a + R"("washout_time_constant": 3, "sensed_state": 1, "input_row": 1})"),
      InvalidPlant);
  EXPECT_THROW(load_plant("/nonexistent/plant.json"), InvalidPlant);
}

}  // namespace
}  // namespace boatune::control
