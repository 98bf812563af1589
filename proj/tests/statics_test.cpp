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

#include "mecanum_energy/statics.hpp"

#include <gtest/gtest.h>

#include <random>

namespace mecanum_energy {
namespace {

// Axle balance solved directly: moments about the rear axle give the front
// axle load, then each axle splits left/right by moments about its centerline.
std::array<double, 4> axle_balance(double weight_normal, double x, double y,
                                   double l1, double l2) {
  const double front = weight_normal * (l1 / 2 + x) / l1;
  const double rear = weight_normal - front;
  const double left_share = (l2 / 2 + y) / l2;
  return {front * left_share, front * (1 - left_share), rear * left_share,
          rear * (1 - left_share)};
}

TEST(SlopeForces, LiteralConventionUphill) {
  const auto f = slope_forces(12.0, deg_to_rad(10.0), kPi / 2, 0.0, 9.81,
                              GravityConvention::kLiteralSin);
  EXPECT_NEAR(f.f_gravity_N, 12 * 9.81 * std::sin(deg_to_rad(10.0)), 1e-12);
  EXPECT_NEAR(f.f_gravity_N, 20.44, 5e-3);
}

TEST(SlopeForces, PhysicalConventionAlongFallLine) {
  const auto f = slope_forces(12.0, deg_to_rad(10.0), 0.0, 0.05, 9.81,
                              GravityConvention::kPhysicalCos);
  EXPECT_NEAR(f.f_gravity_N, 20.44, 5e-3);
  EXPECT_NEAR(f.f_friction_N, 5.797, 5e-4);
  EXPECT_NEAR(f.f_up_N, 26.24, 5e-3);
  EXPECT_DOUBLE_EQ(f.f_up_N, f.f_gravity_N + f.f_friction_N);
}

TEST(SlopeForces, Errors) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIoError;
  };
  EXPECT_EQ(code_of([] {
              slope_forces(12.0, kPi / 2, 0.0, 0.1, 9.81,
                           GravityConvention::kPhysicalCos);
            }),
            ErrorCode::kInvalidIncline);
  EXPECT_EQ(code_of([] {
              slope_forces(12.0, 0.1, 0.0, 1.5, 9.81,
                           GravityConvention::kPhysicalCos);
            }),
            ErrorCode::kCoefficientOutOfRange);
}

TEST(WheelLoads, CogForwardMatchesAxleBalance) {
  RobotParams robot;
  const auto loads = wheel_loads(12.0, CogOffset{0.1, 0.0}, 0.0, robot);
  const auto oracle = axle_balance(12 * 9.81, 0.1, 0.0, 0.86, 0.52);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(loads.n_N(i), oracle[i], 1e-9);
  EXPECT_NEAR(loads.n_N(0), 36.27, 5e-3);
  EXPECT_NEAR(loads.n_N(2), 22.59, 5e-3);
}

TEST(WheelLoads, ConservationAndMomentsOnRandomDraws) {
  RobotParams robot;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(-0.42, 0.42), uy(-0.25, 0.25),
      ug(-1.2, 1.2);
  for (int n = 0; n < 500; ++n) {
    const CogOffset cog{ux(rng), uy(rng)};
    const double gamma = ug(rng);
    const auto loads = wheel_loads(12.0, cog, gamma, robot);
    const double total = 12 * 9.81 * std::cos(gamma);
    EXPECT_NEAR(loads.n_N.sum(), total, 1e-9 * total);
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      mx += loads.n_N(i) * kCornerSignX[i] * robot.length_m / 2;
      my += loads.n_N(i) * kCornerSignY[i] * robot.width_m / 2;
    }
    EXPECT_NEAR(mx, total * cog.x_m, 1e-9 * total);
    EXPECT_NEAR(my, total * cog.y_m, 1e-9 * total);
  }
}

TEST(WheelLoads, CogOutsideFootprint) {
  RobotParams robot;
  try {
    wheel_loads(12.0, CogOffset{0.0, 0.3}, 0.0, robot);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCogOutsideFootprint);
    EXPECT_EQ(e.field(), "scenario.cog_y_m");
  }
}

TEST(Resistance, CopperAt65C) {
  MotorParams motor;
  EXPECT_NEAR(resistance_at(motor, 65.0), 1.1572, 1e-12);
}

TEST(Thermal, StepAndSteadyState) {
  ThermalParams th;
  th.ambient_C = 20.0;
  th.heating_coeff_C_per_J = 0.01;
  th.cooling_coeff_per_s = 0.0;
  EXPECT_NEAR(thermal_step({20.0}, 10.0, 1.0, th).temp_C, 20.1, 1e-12);

  th.cooling_coeff_per_s = 0.05;
  const double t_inf = thermal_steady_state(10.0, th);
  EXPECT_NEAR(t_inf, 20.0 + 0.01 * 10.0 / 0.05, 1e-12);
  EXPECT_NEAR(thermal_step({t_inf}, 10.0, 0.7, th).temp_C, t_inf, 1e-12);
  EXPECT_THROW(thermal_step({20.0}, 10.0, 0.0, th), Error);
}

}  // namespace
}  // namespace mecanum_energy
