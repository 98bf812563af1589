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

#include <algorithm>
#include <cmath>
#include <string>

namespace mecanum_energy {
namespace {

void require_valid(const Scenario& scenario) {
  if (scenario.segments.empty())
    throw Error(ErrorCode::kEmptyScenario, "scenario has no segments");
  if (auto violations = check_scenario(scenario); !violations.empty()) {
    const auto& v = violations.front();
    throw Error(ErrorCode::kInvariantViolation, v.field + ": " + v.message,
                v.field);
  }
}

struct SpeedRegion {
  double begin_m;
  double end_m;
  double speed_m_s;
};

std::vector<SpeedRegion> speed_regions(const TerrainProfile& terrain,
                                       double wheelbase_m,
                                       std::span<const double> speeds) {
  const std::size_t n = terrain.segment_count();
  const double length = terrain.total_length_m();
  const double h = wheelbase_m / 2.0;
  std::vector<SpeedRegion> regions;
  for (std::size_t j = 0; j < n; ++j) {
    const double begin =
        j == 0 ? 0.0 : std::clamp(terrain.segment_start_m(j) - h, 0.0, length);
    const double end = j + 1 == n ? length
                                  : std::clamp(terrain.segment_start_m(j + 1) - h,
                                               0.0, length);
    if (end > begin) regions.push_back({begin, end, speeds[j]});
  }
  return regions;
}

}  // namespace

std::vector<ProfileSample> build_profile(const Scenario& scenario,
                                         const RobotParams& robot) {
  require_valid(scenario);
  const std::vector<double> speeds(scenario.segments.size(),
                                   scenario.commanded_speed_m_s);
  return build_profile(scenario, robot, speeds);
}

std::vector<ProfileSample> build_profile(const Scenario& scenario,
                                         const RobotParams& robot,
                                         std::span<const double> segment_speeds) {
  require_valid(scenario);
  if (segment_speeds.size() != scenario.segments.size())
    throw Error(ErrorCode::kLengthMismatch,
                "need one speed per segment, got " +
                    std::to_string(segment_speeds.size()));
  for (double v : segment_speeds)
    if (!(std::isfinite(v) && v > 0.0))
      throw Error(ErrorCode::kInvariantViolation, "segment speeds must be > 0",
                  "scenario.commanded_speed_m_s");

  const TerrainProfile terrain(scenario, robot.length_m);
  const double dt = scenario.sample_dt_s;
  const auto regions = speed_regions(terrain, robot.length_m, segment_speeds);

  std::vector<ProfileSample> out;
  auto push = [&](double t, double s, double v) {
    ProfileSample p;
    p.t_s = t;
    p.s_m = s;
    p.speed_m_s = v;
    p.incline_rad = terrain.incline_at(s);
    p.incline_slope_per_m = terrain.incline_slope_at(s);
    p.friction_scale = terrain.friction_scale_at(s);
    p.segment = terrain.owning_segment(s);
    out.push_back(p);
  };

  double t_start = 0.0;
  for (const auto& region : regions) {
    const double duration = (region.end_m - region.begin_m) / region.speed_m_s;
    for (std::size_t k = 0;; ++k) {
      const double tk = static_cast<double>(k) * dt;
      if (!(tk < duration - 1e-6 * dt)) break;
      push(t_start + tk, region.begin_m + region.speed_m_s * tk,
           region.speed_m_s);
    }
    t_start += duration;
  }
  push(t_start, terrain.total_length_m(), regions.back().speed_m_s);
  return out;
}

MotionState evaluate_motion(const ProfileSample& sample, const Scenario& scenario,
                            const ModelParams& params, double temp_C) {
  const auto& robot = params.robot;
  MotionState st;
  st.t_s = sample.t_s;
  st.t_model_s = params.options.time_saturation_s
                     ? std::min(sample.t_s, *params.options.time_saturation_s)
                     : sample.t_s;
  st.s_m = sample.s_m;
  st.incline_rad = sample.incline_rad;
  st.friction_scale = sample.friction_scale;
  st.segment = sample.segment;
  st.temp_C = temp_C;

  const double heading = deg_to_rad(scenario.heading_deg);
  st.twist = {sample.speed_m_s * std::cos(heading),
              sample.speed_m_s * std::sin(heading), 0.0};
  st.speed_m_s = st.twist.speed();
  st.heading_rad = heading_angle(st.twist);
  st.omega_rad_s = inverse_kinematics(st.twist, robot);
  st.wheel_speed_m_s = st.omega_rad_s * robot.wheel_radius_m;

  // Speed is held constant; the only acceleration is the pitch change across
  // a junction, shared by every wheel in proportion to its speed.
  st.accel_m_s2 = st.speed_m_s * st.speed_m_s * sample.incline_slope_per_m;
  st.wheel_accel_m_s2 = st.wheel_speed_m_s * (st.accel_m_s2 / st.speed_m_s);

  st.loads = wheel_loads(robot.mass_kg, scenario.cog, st.incline_rad, robot);
  const double theta_for_gravity =
      params.options.gravity_convention == GravityConvention::kLiteralSin
          ? st.heading_rad
          : 0.0;  // the route follows the fall line
  const auto forces = slope_forces(
      robot.mass_kg, st.incline_rad, theta_for_gravity,
      params.friction.mu * st.friction_scale, robot.gravity_m_s2,
      params.options.gravity_convention);
  st.f_up_N = forces.f_up_N;
  st.traction_N = st.loads.n_N * (st.f_up_N / st.loads.total_N);
  return st;
}

PowerBreakdown<double> evaluate_power(const MotionState& st,
                                      const ModelParams& params) {
  const auto& motor = params.motor;
  const double copper = copper_loss(st.f_up_N, st.temp_C, st.t_model_s, motor);
  const double iron =
      iron_loss(st.wheel_speed_m_s, st.wheel_accel_m_s2, st.speed_m_s,
                st.accel_m_s2, st.t_model_s, motor);
  double mechanical = 0.0;
  for (Eigen::Index i = 0; i < 4; ++i)
    mechanical += mechanical_output(st.traction_N(i), st.omega_rad_s(i),
                                    motor.wheels[static_cast<std::size_t>(i)]);
  const double friction = friction_loss(
      st.loads, st.wheel_speed_m_s, st.speed_m_s, st.heading_rad,
      st.incline_rad, params.friction.mu1 * st.friction_scale,
      params.friction.mu2 * st.friction_scale);
  return compose_breakdown(copper, iron, mechanical, friction,
                           control_power(params.control),
                           sensing_power(params.sensing));
}

namespace {

SimulationResult run(const Scenario& scenario, const ValidatedParams& validated,
                     const std::vector<ProfileSample>& profile) {
  const ModelParams& params = validated.get();
  check_cog(scenario.cog, params.robot);

  SimulationResult result;
  auto& trace = result.trace;
  trace.reserve(profile.size());
  ThermalState thermal{scenario.initial_temp_C};
  for (std::size_t k = 0; k < profile.size(); ++k) {
    TraceSample sample;
    sample.state = evaluate_motion(profile[k], scenario, params, thermal.temp_C);
    sample.power = evaluate_power(sample.state, params);
    if (k > 0) {
      const auto& prev = trace.back();
      sample.e_cum_J = prev.e_cum_J + 0.5 * (prev.power.total_W + sample.power.total_W) *
                                          (sample.state.t_s - prev.state.t_s);
    }
    if (k + 1 < profile.size())
      thermal = thermal_step(thermal, sample.power.copper_W,
                             profile[k + 1].t_s - profile[k].t_s,
                             params.thermal);
    trace.push_back(sample);
  }

  auto& report = result.report;
  report.total_J = integrate_energy(trace);
  report.per_channel_J = integrate_channels(trace);
  report.per_segment_J.assign(scenario.segments.size(), 0.0);
  const TerrainProfile terrain(scenario, params.robot.length_m);
  for (std::size_t k = 0; k + 1 < trace.size(); ++k) {
    const auto& a = trace[k];
    const auto& b = trace[k + 1];
    const double mid = 0.5 * (a.state.s_m + b.state.s_m);
    report.per_segment_J[terrain.owning_segment(mid)] +=
        0.5 * (a.power.total_W + b.power.total_W) * (b.state.t_s - a.state.t_s);
  }
  for (const auto& s : trace) report.peak_W = std::max(report.peak_W, s.power.total_W);
  report.duration_s = trace.back().state.t_s - trace.front().state.t_s;
  return result;
}

}  // namespace

SimulationResult simulate(const Scenario& scenario, const ValidatedParams& params) {
  return run(scenario, params, build_profile(scenario, params->robot));
}

SimulationResult simulate_plan(const Scenario& scenario,
                               const ValidatedParams& params,
                               std::span<const double> segment_speeds) {
  return run(scenario, params,
             build_profile(scenario, params->robot, segment_speeds));
}

double integrate_energy(std::span<const double> t_s,
                        std::span<const double> power_W) {
  if (t_s.size() != power_W.size())
    throw Error(ErrorCode::kLengthMismatch,
                "time and power series differ in length");
  if (t_s.size() < 2)
    throw Error(ErrorCode::kTooFewSamples, "need at least 2 samples to integrate");
  double energy = 0.0;
  for (std::size_t k = 0; k + 1 < t_s.size(); ++k) {
    const double dt = t_s[k + 1] - t_s[k];
    if (!(dt > 0.0))
      throw Error(ErrorCode::kNonMonotonicTime,
                  "timestamps must be strictly increasing");
    energy = energy + 0.5 * (power_W[k] + power_W[k + 1]) * dt;
  }
  return energy;
}

namespace {

template <typename Channel>
double integrate_channel(const PowerTrace& trace, Channel channel) {
  std::vector<double> t(trace.size());
  std::vector<double> p(trace.size());
  for (std::size_t k = 0; k < trace.size(); ++k) {
    t[k] = trace[k].state.t_s;
    p[k] = channel(trace[k].power);
  }
  return integrate_energy(t, p);
}

}  // namespace

double integrate_energy(const PowerTrace& trace) {
  return integrate_channel(trace, [](const auto& p) { return p.total_W; });
}

ChannelEnergy integrate_channels(const PowerTrace& trace) {
  ChannelEnergy e;
  e.copper_J = integrate_channel(trace, [](const auto& p) { return p.copper_W; });
  e.iron_J = integrate_channel(trace, [](const auto& p) { return p.iron_W; });
  e.mechanical_J =
      integrate_channel(trace, [](const auto& p) { return p.mechanical_W; });
  e.friction_J =
      integrate_channel(trace, [](const auto& p) { return p.friction_W; });
  e.control_J = integrate_channel(trace, [](const auto& p) { return p.control_W; });
  e.sensing_J = integrate_channel(trace, [](const auto& p) { return p.sensing_W; });
  return e;
}

}  // namespace mecanum_energy
