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

#include "mecanum_energy/statics.hpp"
#include "mecanum_energy/types.hpp"

namespace mecanum_energy {

/// Instantaneous power per channel. motion = copper + iron + mechanical +
/// friction; total = motion + control + sensing.
template <typename Scalar>
struct PowerBreakdown {
  Scalar copper_W{0};
  Scalar iron_W{0};
  Scalar mechanical_W{0};
  Scalar friction_W{0};
  Scalar motion_W{0};
  Scalar control_W{0};
  Scalar sensing_W{0};
  Scalar total_W{0};
};

namespace detail {

template <typename Scalar>
Scalar floor_zero(Scalar v) {
  return v < Scalar(0) ? Scalar(0) : v;
}

template <typename Scalar>
void require_non_negative_time(const Scalar& t_s) {
  if (t_s < Scalar(0))
    throw Error(ErrorCode::kNegativeTime, "elapsed time must be >= 0");
}

}  // namespace detail

/// k(T): affine in (T - T0), floored at zero.
template <typename Scalar>
Scalar speed_energy_factor(const MotorParams& motor, Scalar temp_C) {
  return detail::floor_zero(Scalar(motor.k_T_base) +
                            Scalar(motor.k_T_slope) * (temp_C - Scalar(motor.T0_C)));
}

/// beta(T): affine in (T - T0), floored at zero.
template <typename Scalar>
Scalar temperature_energy_factor(const MotorParams& motor, Scalar temp_C) {
  return detail::floor_zero(Scalar(motor.beta_T_base) +
                            Scalar(motor.beta_T_slope) * (temp_C - Scalar(motor.T0_C)));
}

/// Copper loss from the wheel traction force: tau F^2 + k(T) + beta(T) t.
template <typename Scalar>
Scalar copper_loss(Scalar f_wheel_N, Scalar temp_C, Scalar t_s,
                   const MotorParams& motor) {
  detail::require_non_negative_time(t_s);
  return Scalar(motor.tau) * f_wheel_N * f_wheel_N +
         speed_energy_factor(motor, temp_C) +
         temperature_energy_factor(motor, temp_C) * t_s;
}

/// I^2 R; cross-check channel when current telemetry is available.
template <typename Scalar>
Scalar copper_loss_from_current(Scalar current_A, Scalar resistance_ohm) {
  return current_A * current_A * resistance_ohm;
}

/// Aggregate iron loss
///   lambda1 sum_i v_i a_i + lambda2 t a v^2 + lambda3 t^2 a v^2,
/// per-wheel speeds/accelerations in the first term, body speed and
/// acceleration in the other two. Clamped at zero (deceleration never
/// produces negative loss).
template <typename Scalar>
Scalar iron_loss(const WheelVector<Scalar>& wheel_speed_m_s,
                 const WheelVector<Scalar>& wheel_accel_m_s2, Scalar speed_m_s,
                 Scalar accel_m_s2, Scalar t_s, const MotorParams& motor) {
  detail::require_non_negative_time(t_s);
  const Scalar per_wheel = wheel_speed_m_s.dot(wheel_accel_m_s2);
  const Scalar av2 = accel_m_s2 * speed_m_s * speed_m_s;
  const Scalar raw = Scalar(motor.lambda1) * per_wheel +
                     Scalar(motor.lambda2) * t_s * av2 +
                     Scalar(motor.lambda3) * t_s * t_s * av2;
  return detail::floor_zero(raw);
}

/// One wheel's mechanical output k1 F^2 + k2 |omega| |F|. Braking force is
/// counted at its magnitude (dissipated, not regenerated).
template <typename Scalar>
Scalar mechanical_output(Scalar f_wheel_N, Scalar omega_rad_s,
                         const MechanicalCoefficients& coeffs) {
  using std::abs;
  return Scalar(coeffs.k1) * f_wheel_N * f_wheel_N +
         Scalar(coeffs.k2) * abs(omega_rad_s) * abs(f_wheel_N);
}

template <typename Scalar>
Scalar mechanical_output(Scalar f_wheel_N, Scalar omega_rad_s,
                         const WheelMotorTable& table) {
  return mechanical_output(
      f_wheel_N, omega_rad_s,
      omega_rad_s < Scalar(0) ? table.backward : table.forward);
}

/// Mecanum roller friction loss
///   mu1 sum_i N_i |v_i| |cos theta| + mu2 N |v| |cos theta| cos gamma.
/// Pure lateral motion (theta = 90 deg) yields zero.
template <typename Scalar>
Scalar friction_loss(const WheelLoads<Scalar>& loads,
                     const WheelVector<Scalar>& wheel_speed_m_s,
                     Scalar speed_m_s, Scalar theta_rad, Scalar incline_rad,
                     double mu1, double mu2) {
  using std::abs;
  using std::cos;
  const Scalar cos_theta = abs(cos(theta_rad));
  const Scalar per_wheel = loads.n_N.dot(wheel_speed_m_s.cwiseAbs());
  return Scalar(mu1) * per_wheel * cos_theta +
         Scalar(mu2) * loads.total_N * abs(speed_m_s) * cos_theta * cos(incline_rad);
}

/// Motion-system power; throws NegativeChannel on any negative input.
template <typename Scalar>
Scalar motor_power(Scalar copper_W, Scalar iron_W, Scalar mechanical_W,
                   Scalar friction_W) {
  if (copper_W < Scalar(0) || iron_W < Scalar(0) || mechanical_W < Scalar(0) ||
      friction_W < Scalar(0))
    throw Error(ErrorCode::kNegativeChannel, "power channels must be >= 0");
  return copper_W + iron_W + mechanical_W + friction_W;
}

/// P0 + e_s f_s.
inline double sensing_power(const SensingParams& cfg) {
  return cfg.idle_W + cfg.energy_per_sample_J * cfg.sample_rate_hz;
}

inline double control_power(const ControlParams& cfg) {
  return cfg.base_W + cfg.per_command_J * cfg.command_rate_hz;
}

template <typename Scalar>
PowerBreakdown<Scalar> compose_breakdown(Scalar copper_W, Scalar iron_W,
                                         Scalar mechanical_W, Scalar friction_W,
                                         Scalar control_W, Scalar sensing_W) {
  PowerBreakdown<Scalar> out;
  out.copper_W = copper_W;
  out.iron_W = iron_W;
  out.mechanical_W = mechanical_W;
  out.friction_W = friction_W;
  out.motion_W = motor_power(copper_W, iron_W, mechanical_W, friction_W);
  out.control_W = control_W;
  out.sensing_W = sensing_W;
  out.total_W = out.motion_W + control_W + sensing_W;
  return out;
}

}  // namespace mecanum_energy
