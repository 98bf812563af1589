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

#include "mecanum_energy/kinematics.hpp"

namespace mecanum_energy {

std::vector<WheelVectord> differentiate_wheel_speeds(
    std::span<const WheelSpeedSample> samples, const RobotParams& robot) {
  const std::size_t n = samples.size();
  if (n < 2)
    throw Error(ErrorCode::kTooFewSamples,
                "need at least 2 samples to differentiate");
  for (std::size_t i = 1; i < n; ++i)
    if (!(samples[i].t_s > samples[i - 1].t_s))
      throw Error(ErrorCode::kNonMonotonicTime,
                  "timestamps must be strictly increasing at sample " +
                      std::to_string(i));

  std::vector<WheelVectord> accel(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i == 0 ? 0 : i - 1;
    const std::size_t hi = i + 1 == n ? n - 1 : i + 1;
    accel[i] = (samples[hi].omega_rad_s - samples[lo].omega_rad_s) /
               (samples[hi].t_s - samples[lo].t_s) * robot.wheel_radius_m;
  }
  return accel;
}

}  // namespace mecanum_energy
