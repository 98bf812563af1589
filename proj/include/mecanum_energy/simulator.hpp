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

#include <cstddef>
#include <span>
#include <vector>

#include "mecanum_energy/kinematics.hpp"
#include "mecanum_energy/power_model.hpp"
#include "mecanum_energy/statics.hpp"
#include "mecanum_energy/terrain.hpp"
#include "mecanum_energy/types.hpp"

namespace mecanum_energy {

/// Kinematic state of one sample before any power is evaluated.
struct ProfileSample {
  double t_s = 0.0;
  double s_m = 0.0;
  double speed_m_s = 0.0;
  double incline_rad = 0.0;
  double incline_slope_per_m = 0.0;
  double friction_scale = 1.0;
  std::size_t segment = 0;  // owning segment (front axle)
};

/// Arc-length parameterized samples at the scenario's time step under ideal
/// constant-speed tracking. The last sample sits exactly at the end of the
/// route. Throws EmptyScenario.
std::vector<ProfileSample> build_profile(const Scenario& scenario,
                                         const RobotParams& robot);

/// Same with one cruise speed per segment; the speed switches when the front
/// axle enters the next segment.
std::vector<ProfileSample> build_profile(const Scenario& scenario,
                                         const RobotParams& robot,
                                         std::span<const double> segment_speeds);

/// Everything the power model and the calibration regressors need about one
/// sample.
struct MotionState {
  double t_s = 0.0;
  double t_model_s = 0.0;  // elapsed time fed to time-dependent losses
  double s_m = 0.0;
  double incline_rad = 0.0;
  double friction_scale = 1.0;
  double heading_rad = 0.0;
  double speed_m_s = 0.0;
  double accel_m_s2 = 0.0;
  BodyTwistd twist;
  WheelVectord omega_rad_s = WheelVectord::Zero();
  WheelVectord wheel_speed_m_s = WheelVectord::Zero();
  WheelVectord wheel_accel_m_s2 = WheelVectord::Zero();
  WheelLoads<double> loads;
  double f_up_N = 0.0;
  WheelVectord traction_N = WheelVectord::Zero();
  double temp_C = 25.0;
  std::size_t segment = 0;
};

struct TraceSample {
  MotionState state;
  PowerBreakdown<double> power;
  double e_cum_J = 0.0;
};

using PowerTrace = std::vector<TraceSample>;

struct ChannelEnergy {
  double copper_J = 0.0;
  double iron_J = 0.0;
  double mechanical_J = 0.0;
  double friction_J = 0.0;
  double control_J = 0.0;
  double sensing_J = 0.0;

  double sum() const {
    return copper_J + iron_J + mechanical_J + friction_J + control_J +
           sensing_J;
  }
};

struct EnergyReport {
  double total_J = 0.0;
  ChannelEnergy per_channel_J;
  std::vector<double> per_segment_J;
  double peak_W = 0.0;
  double duration_s = 0.0;
};

struct SimulationResult {
  PowerTrace trace;
  EnergyReport report;
};

/// Kinematics, loads and slope forces for one profile sample at the given
/// winding temperature. Traction is split across wheels by load share.
MotionState evaluate_motion(const ProfileSample& sample, const Scenario& scenario,
                            const ModelParams& params, double temp_C);

/// Every power channel for a motion state.
PowerBreakdown<double> evaluate_power(const MotionState& state,
                                      const ModelParams& params);

/// Runs the model along the scenario. Deterministic: identical inputs give a
/// bit-identical trace. Throws EmptyScenario, InvariantViolation,
/// CogOutsideFootprint, CoefficientOutOfRange.
SimulationResult simulate(const Scenario& scenario, const ValidatedParams& params);

SimulationResult simulate_plan(const Scenario& scenario,
                               const ValidatedParams& params,
                               std::span<const double> segment_speeds);

/// Trapezoidal rule. Throws TooFewSamples (< 2), LengthMismatch,
/// NonMonotonicTime.
double integrate_energy(std::span<const double> t_s,
                        std::span<const double> power_W);

/// Total-power energy of a trace.
double integrate_energy(const PowerTrace& trace);
ChannelEnergy integrate_channels(const PowerTrace& trace);

}  // namespace mecanum_energy
