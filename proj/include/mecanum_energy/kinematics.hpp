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
#include <span>
#include <vector>

#include <Eigen/Core>

#include "mecanum_energy/types.hpp"

namespace mecanum_energy {

/// Planar body velocity in the robot frame.
template <typename Scalar>
struct BodyTwist {
  Scalar vx{0};
  Scalar vy{0};
  Scalar wz{0};

  Scalar speed() const {
    using std::sqrt;
    return sqrt(vx * vx + vy * vy);
  }

  Eigen::Matrix<Scalar, 3, 1> as_vector() const { return {vx, vy, wz}; }

  bool operator==(const BodyTwist&) const = default;
};

using BodyTwistd = BodyTwist<double>;

/// 4x3 map from (vx, vy, wz) to wheel angular speeds, rows FL, FR, RL, RR.
template <typename Scalar>
Eigen::Matrix<Scalar, 4, 3> wheel_jacobian(const RobotParams& robot) {
  const Scalar inv_r = Scalar(1.0 / robot.wheel_radius_m);
  const Scalar k = Scalar((robot.length_m + robot.width_m) / 2.0);
  Eigen::Matrix<Scalar, 4, 3> j;
  // clang-format off
  j << Scalar(1), Scalar(-1), -k,
       Scalar(1), Scalar( 1),  k,
       Scalar(1), Scalar( 1), -k,
       Scalar(1), Scalar(-1),  k;
  // clang-format on
  return j * inv_r;
}

template <typename Scalar>
WheelVector<Scalar> inverse_kinematics(const BodyTwist<Scalar>& twist,
                                       const RobotParams& robot) {
  return wheel_jacobian<Scalar>(robot) * twist.as_vector();
}

/// Least-squares body twist for any wheel-speed set. The jacobian columns are
/// mutually orthogonal, so the pseudo-inverse reduces to scaled column sums.
template <typename Scalar>
BodyTwist<Scalar> forward_kinematics(const WheelVector<Scalar>& omega,
                                     const RobotParams& robot) {
  const Scalar r = Scalar(robot.wheel_radius_m);
  const Scalar k = Scalar((robot.length_m + robot.width_m) / 2.0);
  BodyTwist<Scalar> out;
  out.vx = r * (omega(0) + omega(1) + omega(2) + omega(3)) / Scalar(4);
  out.vy = r * (-omega(0) + omega(1) + omega(2) - omega(3)) / Scalar(4);
  out.wz = r * (-omega(0) + omega(1) - omega(2) + omega(3)) / (Scalar(4) * k);
  return out;
}

/// Direction of motion relative to the robot's forward axis, in (-pi, pi].
/// Throws ZeroVelocity for a twist without translation.
template <typename Scalar>
Scalar heading_angle(const BodyTwist<Scalar>& twist) {
  using std::atan2;
  if (twist.vx == Scalar(0) && twist.vy == Scalar(0))
    throw Error(ErrorCode::kZeroVelocity,
                "heading is undefined without translation");
  Scalar theta = atan2(twist.vy, twist.vx);
  if (theta <= Scalar(-kPi)) theta = Scalar(kPi);
  return theta;
}

struct WheelSpeedSample {
  double t_s = 0.0;
  WheelVectord omega_rad_s = WheelVectord::Zero();
};

/// Linear wheel accelerations (m/s^2) per sample: central differences inside,
/// one-sided at both ends. Throws TooFewSamples / NonMonotonicTime.
std::vector<WheelVectord> differentiate_wheel_speeds(
    std::span<const WheelSpeedSample> samples, const RobotParams& robot);

}  // namespace mecanum_energy
