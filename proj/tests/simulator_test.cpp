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

#include "mecanum_energy/simulator.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "mecanum_energy/terrain.hpp"
#include "test_support.hpp"

namespace mecanum_energy {
namespace {

using testing::flat_scenario;
using testing::ramp_scenario;

ValidatedParams defaults() { return validate_params(ModelParams{}); }

// Mean motion power over samples whose front and rear axle both sit inside
// [begin, end] of arc length.
double steady_motion_power(const PowerTrace& trace, double begin, double end,
                           double wheelbase) {
  double sum = 0.0;
  int n = 0;
  for (const auto& s : trace) {
    if (s.state.s_m - wheelbase / 2 >= begin && s.state.s_m + wheelbase / 2 <= end) {
      sum += s.power.motion_W;
      ++n;
    }
  }
  return sum / n;
}

TEST(BuildProfile, FlatRunSampling) {
  const auto profile = build_profile(flat_scenario(4.0, 0.5, 0.01), RobotParams{});
  ASSERT_EQ(profile.size(), 801u);
  EXPECT_DOUBLE_EQ(profile.back().t_s, 8.0);
  EXPECT_DOUBLE_EQ(profile.back().s_m, 4.0);
  for (const auto& p : profile) {
    EXPECT_EQ(p.incline_rad, 0.0);
    EXPECT_EQ(p.incline_slope_per_m, 0.0);
  }
}

TEST(BuildProfile, JunctionRampsOverOneWheelbase) {
  Scenario s = flat_scenario();
  s.segments = {{2.0, 0.0, 1.0}, {2.0, 10.0, 1.0}};
  const TerrainProfile terrain(s, 0.86);
  EXPECT_NEAR(terrain.incline_at(2.0 - 0.43), 0.0, 1e-12);
  EXPECT_NEAR(rad_to_deg(terrain.incline_at(2.0)), 5.0, 1e-12);
  EXPECT_NEAR(rad_to_deg(terrain.incline_at(2.0 + 0.43)), 10.0, 1e-12);
  EXPECT_NEAR(terrain.incline_slope_at(2.0), deg_to_rad(10.0) / 0.86, 1e-12);
  EXPECT_EQ(terrain.incline_slope_at(1.0), 0.0);
  EXPECT_EQ(terrain.owning_segment(1.5), 0u);
  EXPECT_EQ(terrain.owning_segment(1.6), 1u);
}

TEST(BuildProfile, SlopeAtRampEdgeIsStableUnderRounding) {
  Scenario s = flat_scenario();
  s.segments = {{2.0, 0.0, 1.0}, {2.0, 10.0, 1.0}};
  const TerrainProfile terrain(s, 0.86);
  const double full = deg_to_rad(10.0) / 0.86;
  const double edge = 2.0 - 0.43;
  EXPECT_NEAR(terrain.incline_slope_at(edge), full / 2, 1e-12);
  EXPECT_NEAR(terrain.incline_slope_at(std::nextafter(edge, 0.0)), full / 2, 1e-12);
  EXPECT_NEAR(terrain.incline_slope_at(std::nextafter(edge, 9.0)), full / 2, 1e-12);
  EXPECT_EQ(terrain.incline_slope_at(edge - 1e-6), 0.0);
  EXPECT_NEAR(terrain.incline_slope_at(edge + 1e-6), full, 1e-12);
}

TEST(BuildProfile, EmptyScenarioThrows) {
  Scenario s = flat_scenario();
  s.segments.clear();
  try {
    build_profile(s, RobotParams{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyScenario);
  }
}

TEST(BuildProfile, PerSegmentSpeedsSwitchAtFrontAxle) {
  Scenario s = flat_scenario();
  s.segments = {{2.0, 0.0, 1.0}, {2.0, 0.0, 1.0}};
  const std::vector<double> speeds{0.5, 1.0};
  const auto profile = build_profile(s, RobotParams{}, speeds);
  const double switch_s = 2.0 - 0.43;
  for (const auto& p : profile)
    EXPECT_EQ(p.speed_m_s, p.s_m < switch_s - 1e-12 ? 0.5 : 1.0) << p.s_m;
  EXPECT_DOUBLE_EQ(profile.back().t_s, switch_s / 0.5 + (4.0 - switch_s) / 1.0);
  const std::vector<double> wrong{0.5};
  EXPECT_THROW(build_profile(s, RobotParams{}, wrong), Error);
}

// Only the mechanical channel active: constant power P over d at speed v.
TEST(Simulate, ConstantPowerClosedForm) {
  ModelParams p;
  p.motor.tau = p.motor.k_T_base = p.motor.k_T_slope = 0.0;
  p.motor.beta_T_base = 0.0;
  p.motor.lambda1 = p.motor.lambda2 = p.motor.lambda3 = 0.0;
  p.friction.mu1 = p.friction.mu2 = 0.0;
  p.sensing = {0.0, 0.0, 0.0};
  p.control = {0.0, 0.0, 0.0};
  const double v = 0.5;
  const auto result = simulate(flat_scenario(4.0, v, 0.01), validate_params(p));

  const double f_wheel = p.friction.mu * 12.0 * 9.81 / 4.0;
  const double omega = v / 0.076;
  const double power = 4.0 * (0.0019 * f_wheel * f_wheel + 1.5223 * omega * f_wheel);
  EXPECT_NEAR(result.report.total_J, power * 4.0 / v, 1e-9 * power * 8.0);
}

TEST(Simulate, DeterministicAndConsistent) {
  const auto params = defaults();
  const auto a = simulate(ramp_scenario(), params);
  const auto b = simulate(ramp_scenario(), params);
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t k = 0; k < a.trace.size(); ++k) {
    EXPECT_EQ(a.trace[k].power.total_W, b.trace[k].power.total_W);
    EXPECT_EQ(a.trace[k].e_cum_J, b.trace[k].e_cum_J);
  }
  EXPECT_EQ(a.report.total_J, integrate_energy(a.trace));
  EXPECT_EQ(a.report.total_J, a.trace.back().e_cum_J);
  for (std::size_t k = 1; k < a.trace.size(); ++k)
    EXPECT_GE(a.trace[k].e_cum_J, a.trace[k - 1].e_cum_J);

  double seg_sum = 0.0;
  for (double e : a.report.per_segment_J) seg_sum += e;
  EXPECT_NEAR(seg_sum, a.report.total_J, 1e-9 * a.report.total_J);
  EXPECT_NEAR(a.report.per_channel_J.sum(), a.report.total_J,
              1e-9 * a.report.total_J);
  EXPECT_DOUBLE_EQ(a.report.duration_s, 24.0);
}

TEST(Simulate, UphillFlatDownhillOrdering) {
  const auto result = simulate(ramp_scenario(), defaults());
  const double l1 = 0.86;
  const double flat = steady_motion_power(result.trace, 0.0, 2.0, l1);
  const double up = steady_motion_power(result.trace, 2.0, 6.0, l1);
  const double down = steady_motion_power(result.trace, 8.0, 12.0, l1);
  EXPECT_GT(up, flat);
  EXPECT_GT(flat, down);
}

TEST(Simulate, UphillEnergyNondecreasingInSlope) {
  const auto params = defaults();
  double previous = 0.0;
  for (double gamma = 0.0; gamma <= 20.0; gamma += 2.5) {
    Scenario s = flat_scenario(4.0, 0.5, 0.02);
    s.segments[0].incline_deg = gamma;
    const double e = simulate(s, params).report.total_J;
    EXPECT_GE(e, previous) << gamma;
    previous = e;
  }
}

TEST(Simulate, CogOffsetIncreasesEnergySuperlinearly) {
  const auto params = defaults();
  std::vector<double> energy;
  for (double x : {0.0, 0.05, 0.10, 0.15}) {
    Scenario s = ramp_scenario();
    s.cog = {x, 0.0};
    energy.push_back(simulate(s, params).report.total_J);
  }
  for (std::size_t i = 1; i < energy.size(); ++i) EXPECT_GT(energy[i], energy[i - 1]);
  EXPECT_GE(energy[2] - energy[1], energy[1] - energy[0]);
  EXPECT_GE(energy[3] - energy[2], energy[2] - energy[1]);
}

TEST(Simulate, SensingRateOrdering) {
  ModelParams p;
  const auto slow = simulate(ramp_scenario(), validate_params(p));
  p.sensing.sample_rate_hz = 50.0;
  const auto fast = simulate(ramp_scenario(), validate_params(p));
  EXPECT_GT(fast.report.per_channel_J.sensing_J, slow.report.per_channel_J.sensing_J);
}

TEST(Simulate, JunctionPowerExceedsAdjacentSteadyMinimum) {
  const auto result = simulate(ramp_scenario(), defaults());
  const double l1 = 0.86;
  const double flat = steady_motion_power(result.trace, 0.0, 2.0, l1);
  const double up = steady_motion_power(result.trace, 2.0, 6.0, l1);
  double transition_max = 0.0;
  for (const auto& s : result.trace)
    if (std::abs(s.state.s_m - 2.0) < l1 / 2)
      transition_max = std::max(transition_max, s.power.motion_W);
  EXPECT_GT(transition_max, std::min(flat, up));
}

TEST(Simulate, CogOutsideFootprintThrows) {
  Scenario s = flat_scenario();
  s.cog = {0.5, 0.0};
  try {
    simulate(s, defaults());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCogOutsideFootprint);
  }
}

TEST(Simulate, LiteralConventionUsesHeading) {
  ModelParams p;
  p.options.gravity_convention = GravityConvention::kLiteralSin;
  Scenario s = flat_scenario(4.0, 0.5, 0.02);
  s.segments[0].incline_deg = 10.0;
  const auto straight = simulate(s, validate_params(p));
  s.heading_deg = 90.0;
  const auto sideways = simulate(s, validate_params(p));
  EXPECT_GT(sideways.trace[50].state.f_up_N, straight.trace[50].state.f_up_N);
}

TEST(Simulate, TimeSaturationCapsModelTime) {
  ModelParams p;
  p.options.time_saturation_s = 2.0;
  const auto r = simulate(flat_scenario(), validate_params(p));
  EXPECT_EQ(r.trace.back().state.t_model_s, 2.0);
  EXPECT_EQ(r.trace[100].state.t_model_s, r.trace[100].state.t_s);
}

TEST(IntegrateEnergy, ExactCases) {
  std::vector<double> t, constant, ramp;
  for (int k = 0; k <= 50; ++k) {
    t.push_back(0.2 * k);
    constant.push_back(10.0);
    ramp.push_back(k);  // 0..50 W over 10 s
  }
  EXPECT_NEAR(integrate_energy(std::span(t).first(26), std::span(constant).first(26)),
              50.0, 1e-12);
  EXPECT_NEAR(integrate_energy(t, ramp), 250.0, 1e-12);

  const std::vector<double> one{1.0};
  EXPECT_THROW(integrate_energy(one, one), Error);
  const std::vector<double> back{1.0, 0.5};
  const std::vector<double> p2{1.0, 1.0};
  try {
    integrate_energy(back, p2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonMonotonicTime);
  }
  try {
    integrate_energy(p2, one);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
}

TEST(IntegrateEnergy, RichardsonHalving) {
  const auto params = defaults();
  const double coarse = simulate(ramp_scenario(10.0, 0.5, 0.02), params).report.total_J;
  const double fine = simulate(ramp_scenario(10.0, 0.5, 0.01), params).report.total_J;
  EXPECT_LT(std::abs(coarse - fine) / fine, 1e-3);
}

}  // namespace
}  // namespace mecanum_energy
