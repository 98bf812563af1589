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

#pragma once

#include <cmath>

#include "mecanum_energy/types.hpp"

namespace mecanum_energy {

template <typename Scalar>
struct SlopeForces {
  Scalar f_gravity_N{0};   // along-slope gravity component
  Scalar f_friction_N{0};  // total resisting friction
  Scalar f_up_N{0};        // traction the wheels must supply; < 0 means braking
};

/// Force balance along the direction of travel on an incline.
///
/// `theta_rad` is interpreted per `convention`: the angle between the motion
/// direction and the fall line for kPhysicalCos, the body-frame heading for
/// kLiteralSin. Downhill inclines are negative, which makes the gravity term
/// negative and F_up = F_gravity + F_friction fall below zero when braking.
template <typename Scalar>
SlopeForces<Scalar> slope_forces(Scalar mass_kg, Scalar incline_rad,
                                 Scalar theta_rad, Scalar mu_eff,
                                 double gravity_m_s2,
                                 GravityConvention convention) {
  using std::abs;
  using std::cos;
  using std::sin;
  if (!(abs(incline_rad) < Scalar(kPi / 2)))
    throw Error(ErrorCode::kInvalidIncline, "incline must satisfy |gamma| < 90 deg");
  if (!(mu_eff >= Scalar(0) && mu_eff <= Scalar(1)))
    throw Error(ErrorCode::kCoefficientOutOfRange,
                "effective friction factor must lie in [0, 1]", "friction.mu");

  const Scalar weight = mass_kg * Scalar(gravity_m_s2);
  const Scalar direction = convention == GravityConvention::kLiteralSin
                               ? Scalar(sin(theta_rad))
                               : Scalar(cos(theta_rad));
  SlopeForces<Scalar> out;
  out.f_gravity_N = weight * direction * sin(incline_rad);
  out.f_friction_N = mu_eff * weight * cos(incline_rad);
  out.f_up_N = out.f_gravity_N + out.f_friction_N;
  return out;
}

template <typename Scalar>
struct WheelLoads {
  WheelVector<Scalar> n_N = WheelVector<Scalar>::Zero();
  Scalar total_N{0};
};

/// Longitudinal (+front) and lateral (+left) corner signs per wheel.
inline constexpr std::array<double, kWheelCount> kCornerSignX{1, 1, -1, -1};
inline constexpr std::array<double, kWheelCount> kCornerSignY{1, -1, 1, -1};

/// Normal loads under a CoG offset: each corner takes the bilinear share
/// (1/2 + sx x/L1)(1/2 + sy y/L2) of m g cos(gamma). The shares sum to one
/// and reproduce both moment balances exactly.
template <typename Scalar>
WheelLoads<Scalar> wheel_loads(Scalar mass_kg, const CogOffset& cog,
                               Scalar incline_rad, const RobotParams& robot) {
  using std::abs;
  using std::cos;
  check_cog(cog, robot);
  if (!(abs(incline_rad) < Scalar(kPi / 2)))
    throw Error(ErrorCode::kInvalidIncline, "incline must satisfy |gamma| < 90 deg");

  WheelLoads<Scalar> out;
  out.total_N = mass_kg * Scalar(robot.gravity_m_s2) * cos(incline_rad);
  const double ux = cog.x_m / robot.length_m;
  const double uy = cog.y_m / robot.width_m;
  for (std::size_t i = 0; i < kWheelCount; ++i) {
    const double share =
        (0.5 + kCornerSignX[i] * ux) * (0.5 + kCornerSignY[i] * uy);
    out.n_N(static_cast<Eigen::Index>(i)) = out.total_N * Scalar(share);
  }
  return out;
}

/// Winding resistance R0 (1 + alpha (T - T0)).
template <typename Scalar>
Scalar resistance_at(const MotorParams& motor, Scalar temp_C) {
  return Scalar(motor.R0_ohm) *
         (Scalar(1) + Scalar(motor.alpha_per_C) * (temp_C - Scalar(motor.T0_C)));
}

struct ThermalState {
  double temp_C = 25.0;
};

/// Explicit first-order update
/// T' = T + dt (c1 P_copper - c2 (T - ambient)); stable while dt c2 < 1.
ThermalState thermal_step(ThermalState state, double p_copper_W, double dt_s,
                          const ThermalParams& thermal);

/// Fixed point of thermal_step for constant copper power (c2 > 0).
double thermal_steady_state(double p_copper_W, const ThermalParams& thermal);

}  // namespace mecanum_energy
