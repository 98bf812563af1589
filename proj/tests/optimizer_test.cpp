// Copyright 2026 The mecanum-energy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mecanum_energy/optimizer.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "test_support.hpp"

namespace mecanum_energy {
namespace {

double toy_energy(double v) { return (5.0 / v + 5.0 * v) * 4.0; }

// Strong iron losses at the uphill junction give an interior optimum.
ValidatedParams interior_params() {
  ModelParams p;
  p.motor.lambda1 = 40.0;
  return validate_params(p);
}

Scenario coarse_ramp() { return testing::ramp_scenario(10.0, 0.5, 0.04); }

struct GridMin {
  double v;
  double energy;
  double step;
};

template <typename Fn>
GridMin grid_minimum(Fn&& energy, double lo, double hi, int points) {
  GridMin best{lo, energy(lo), (hi - lo) / (points - 1)};
  for (int i = 1; i < points; ++i) {
    const double v = lo + best.step * i;
    const double e = energy(v);
    if (e < best.energy) best = {v, e, best.step};
  }
  return best;
}

TEST(MinEnergySpeed, ToyModel) {
  EXPECT_DOUBLE_EQ(toy_energy(1.0), 40.0);
  const double tol = 1e-6;
  const auto best = min_energy_speed(toy_energy, 0.1, 3.0, tol);
  EXPECT_NEAR(best.v_m_s, 1.0, tol);
  EXPECT_NEAR(best.energy_J, 40.0, 1e-9);
  const auto& last = best.bracket_history.back();
  EXPECT_LE(last.hi_m_s - last.lo_m_s, tol);
  EXPECT_EQ(best.bracket_history.size(), static_cast<std::size_t>(best.iterations) + 1);
}

TEST(MinEnergySpeed, ShrinkingTolNeverIncreasesEnergy) {
  const auto params = interior_params();
  double previous = std::numeric_limits<double>::infinity();
  for (double tol : {0.5, 0.1, 0.02, 1e-3, 1e-4}) {
    const auto best = min_energy_speed(coarse_ramp(), params, 0.1, 3.0, tol);
    EXPECT_LE(best.energy_J, previous) << tol;
    previous = best.energy_J;
  }
}

TEST(MinEnergySpeed, NotWorseThanEndpointsWhenMultimodal) {
  auto wavy = [](double v) { return std::sin(7.0 * v) + 0.1 * v; };
  const auto best = min_energy_speed(wavy, 0.0 + 1e-3, 3.0, 1e-5);
  EXPECT_LE(best.energy_J, wavy(1e-3));
  EXPECT_LE(best.energy_J, wavy(3.0));
}

TEST(MinEnergySpeed, MatchesBruteForceGrid) {
  const auto params = interior_params();
  const auto scenario = coarse_ramp();
  const auto grid = grid_minimum(
      [&](double v) { return energy_of_speed(scenario, params, v); }, 0.1, 3.0, 1000);
  const auto best = min_energy_speed(scenario, params, 0.1, 3.0, 1e-4);
  EXPECT_GT(grid.v, 0.2);  // interior
  EXPECT_LT(grid.v, 2.9);
  EXPECT_LE(std::abs(best.v_m_s - grid.v), grid.step);
  EXPECT_LE(best.energy_J, grid.energy * (1 + 1e-12));
}

TEST(MinEnergySpeed, InvalidBracket) {
  for (auto [lo, hi, tol] : {std::tuple{0.0, 1.0, 1e-3}, std::tuple{1.0, 0.5, 1e-3},
                             std::tuple{0.1, 1.0, 0.0}, std::tuple{-1.0, 1.0, 1e-3}}) {
    try {
      min_energy_speed(toy_energy, lo, hi, tol);
      ADD_FAILURE() << lo << " " << hi << " " << tol;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidBracket);
    }
  }
}

TEST(EnergyOfSpeed, SlowRunsCostMoreAndSegmentsSumToTotal) {
  const auto params = validate_params(ModelParams{});
  const auto scenario = coarse_ramp();
  EXPECT_GT(energy_of_speed(scenario, params, 0.25),
            energy_of_speed(scenario, params, 0.5));
  const auto a = segment_energies_of_speed(scenario, params, 0.8);
  double sum = 0.0;
  for (double e : a) sum += e;
  EXPECT_NEAR(sum, energy_of_speed(scenario, params, 0.8), 1e-9 * sum);
}

TEST(PerSegmentSpeeds, UniformFlatSegmentsShareTheSingleOptimum) {
  ModelParams p;
  p.motor.beta_T_base = 0.0;
  p.thermal.heating_coeff_C_per_J = 0.0;
  const auto params = validate_params(p);
  Scenario s = testing::flat_scenario(2.0, 0.5, 0.04);
  s.segments.assign(3, s.segments[0]);
  const double tol = 1e-3;
  const auto plan = per_segment_speeds(s, params, 0.1, 2.0, tol);
  for (double v : plan.v_m_s) EXPECT_NEAR(v, plan.single_speed.v_m_s, 2 * tol);
}

TEST(PerSegmentSpeeds, PlanPropertiesOnRamp) {
  const auto params = interior_params();
  const auto scenario = coarse_ramp();
  const double lo = 0.1, hi = 3.0;
  const auto plan = per_segment_speeds(scenario, params, lo, hi, 1e-4);
  ASSERT_EQ(plan.v_m_s.size(), 4u);
  for (double v : plan.v_m_s) {
    EXPECT_GE(v, lo);
    EXPECT_LE(v, hi);
  }
  EXPECT_LE(plan.predicted_energy_J, plan.single_speed.energy_J + 1e-9);
  EXPECT_LE(plan.coupling_error, 5e-3);
  EXPECT_EQ(plan.total_energy_J,
            simulate_plan(scenario, params, plan.v_m_s).report.total_J);

  // Each segment against its own brute-force grid.
  for (std::size_t j = 0; j < plan.v_m_s.size(); ++j) {
    const auto grid = grid_minimum(
        [&](double v) { return segment_energies_of_speed(scenario, params, v)[j]; },
        lo, hi, 300);
    EXPECT_LE(std::abs(plan.v_m_s[j] - grid.v), grid.step) << "segment " << j;
  }
  // The uphill segment carries the junction losses and is driven slower.
  EXPECT_LE(plan.v_m_s[1], plan.v_m_s[0]);
}

TEST(PerSegmentSpeeds, IndependentOfJobCount) {
  const auto params = interior_params();
  const auto scenario = coarse_ramp();
  const auto a = per_segment_speeds(scenario, params, 0.1, 3.0, 1e-3, 1);
  const auto b = per_segment_speeds(scenario, params, 0.1, 3.0, 1e-3, 3);
  EXPECT_EQ(a.v_m_s, b.v_m_s);
  EXPECT_EQ(a.total_energy_J, b.total_energy_J);
}

}  // namespace
}  // namespace mecanum_energy
