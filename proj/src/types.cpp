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

#include "mecanum_energy/types.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace mecanum_energy {

double MotorParams::k_at(double temp_C) const {
  return std::max(0.0, k_T_base + k_T_slope * (temp_C - T0_C));
}

double MotorParams::beta_at(double temp_C) const {
  return std::max(0.0, beta_T_base + beta_T_slope * (temp_C - T0_C));
}

std::string_view to_string(GravityConvention convention) {
  switch (convention) {
    case GravityConvention::kPhysicalCos: return "physical_cos";
    case GravityConvention::kLiteralSin: return "literal_sin";
  }
  return "physical_cos";
}

double Scenario::total_length_m() const {
  double total = 0.0;
  for (const auto& seg : segments) total += seg.length_m;
  return total;
}

namespace {

class Checker {
 public:
  explicit Checker(std::vector<Violation>& out) : out_(out) {}

  // Each helper records at most one violation for `field`.
  bool finite(std::string_view field, double value) {
    if (std::isfinite(value)) return true;
    add(ErrorCode::kCoefficientOutOfRange, field, "must be finite");
    return false;
  }

  void positive(std::string_view field, double value,
                ErrorCode code = ErrorCode::kCoefficientOutOfRange) {
    if (!finite(field, value)) return;
    if (value <= 0.0) add(code, field, "must be > 0, got " + fmt(value));
  }

  void non_negative(std::string_view field, double value) {
    if (!finite(field, value)) return;
    if (value < 0.0) add(ErrorCode::kCoefficientOutOfRange, field,
                         "must be >= 0, got " + fmt(value));
  }

  void unit_interval(std::string_view field, double value) {
    if (!finite(field, value)) return;
    if (value < 0.0 || value > 1.0)
      add(ErrorCode::kCoefficientOutOfRange, field,
          "must lie in [0, 1], got " + fmt(value));
  }

  void add(ErrorCode code, std::string_view field, std::string message) {
    out_.push_back({code, std::string(field), std::move(message)});
  }

  static std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
  }

 private:
  std::vector<Violation>& out_;
};

}  // namespace

std::vector<Violation> check_params(const ModelParams& p) {
  std::vector<Violation> out;
  Checker c(out);

  const auto& r = p.robot;
  c.positive("robot.mass_kg", r.mass_kg, ErrorCode::kNonPositiveMass);
  c.positive("robot.length_m", r.length_m);
  c.positive("robot.width_m", r.width_m);
  if (c.finite("robot.wheel_radius_m", r.wheel_radius_m)) {
    const double limit = std::min(r.length_m, r.width_m) / 2.0;
    if (r.wheel_radius_m <= 0.0) {
      c.add(ErrorCode::kCoefficientOutOfRange, "robot.wheel_radius_m",
            "must be > 0, got " + Checker::fmt(r.wheel_radius_m));
    } else if (!(r.wheel_radius_m < limit)) {
      c.add(ErrorCode::kRadiusTooLarge, "robot.wheel_radius_m",
            "must be < min(length, width)/2 = " + Checker::fmt(limit));
    }
  }
  c.positive("robot.gravity_m_s2", r.gravity_m_s2);
  c.positive("robot.supply_voltage_V", r.supply_voltage_V);

  const auto& m = p.motor;
  c.positive("motor.R0_ohm", m.R0_ohm);
  if (c.finite("motor.T0_C", m.T0_C) && m.T0_C < kAbsoluteZeroC)
    c.add(ErrorCode::kCoefficientOutOfRange, "motor.T0_C",
          "below absolute zero");
  c.non_negative("motor.alpha_per_C", m.alpha_per_C);
  c.non_negative("motor.tau", m.tau);
  c.non_negative("motor.k_T_base", m.k_T_base);
  c.finite("motor.k_T_slope", m.k_T_slope);
  c.non_negative("motor.beta_T_base", m.beta_T_base);
  c.finite("motor.beta_T_slope", m.beta_T_slope);
  c.non_negative("motor.lambda1", m.lambda1);
  c.non_negative("motor.lambda2", m.lambda2);
  c.non_negative("motor.lambda3", m.lambda3);
  for (std::size_t i = 0; i < kWheelCount; ++i) {
    const std::string prefix = "motor." + std::string(kWheelNames[i]) + ".";
    c.non_negative(prefix + "k1_forward", m.wheels[i].forward.k1);
    c.non_negative(prefix + "k2_forward", m.wheels[i].forward.k2);
    c.non_negative(prefix + "k1_backward", m.wheels[i].backward.k1);
    c.non_negative(prefix + "k2_backward", m.wheels[i].backward.k2);
  }
  if (m.armature_current_A)
    c.finite("motor.armature_current_A", *m.armature_current_A);
  if (m.emf_V) c.finite("motor.emf_V", *m.emf_V);

  c.unit_interval("friction.mu", p.friction.mu);
  c.unit_interval("friction.mu1", p.friction.mu1);
  c.unit_interval("friction.mu2", p.friction.mu2);

  if (c.finite("thermal.ambient_C", p.thermal.ambient_C) &&
      p.thermal.ambient_C < kAbsoluteZeroC)
    c.add(ErrorCode::kCoefficientOutOfRange, "thermal.ambient_C",
          "below absolute zero");
  c.non_negative("thermal.heating_coeff_C_per_J",
                 p.thermal.heating_coeff_C_per_J);
  c.non_negative("thermal.cooling_coeff_per_s", p.thermal.cooling_coeff_per_s);

  c.non_negative("sensing.idle_W", p.sensing.idle_W);
  c.non_negative("sensing.energy_per_sample_J",
                 p.sensing.energy_per_sample_J);
  c.non_negative("sensing.sample_rate_hz", p.sensing.sample_rate_hz);
  c.non_negative("control.base_W", p.control.base_W);
  c.non_negative("control.per_command_J", p.control.per_command_J);
  c.non_negative("control.command_rate_hz", p.control.command_rate_hz);

  if (p.options.time_saturation_s)
    c.positive("model.time_saturation_s", *p.options.time_saturation_s);
  return out;
}

ValidatedParams validate_params(const ModelParams& params) {
  auto violations = check_params(params);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return ValidatedParams(params);
}

std::vector<Violation> check_scenario(const Scenario& s) {
  std::vector<Violation> out;
  Checker c(out);
  auto invariant = [&](std::string_view field, bool ok, std::string msg) {
    if (!ok) c.add(ErrorCode::kInvariantViolation, field, std::move(msg));
  };
  invariant("segment", !s.segments.empty(), "at least one segment required");
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const auto& seg = s.segments[i];
    const std::string prefix = "segment." + std::to_string(i) + ".";
    invariant(prefix + "length_m",
              std::isfinite(seg.length_m) && seg.length_m > 0.0,
              "must be > 0");
    invariant(prefix + "incline_deg",
              std::isfinite(seg.incline_deg) && std::abs(seg.incline_deg) < 90.0,
              "must satisfy |incline| < 90");
    invariant(prefix + "friction_scale",
              std::isfinite(seg.friction_scale) && seg.friction_scale > 0.0,
              "must be > 0");
  }
  invariant("scenario.commanded_speed_m_s",
            std::isfinite(s.commanded_speed_m_s) && s.commanded_speed_m_s > 0.0,
            "must be > 0");
  invariant("scenario.heading_deg", std::isfinite(s.heading_deg),
            "must be finite");
  invariant("scenario.cog_x_m", std::isfinite(s.cog.x_m), "must be finite");
  invariant("scenario.cog_y_m", std::isfinite(s.cog.y_m), "must be finite");
  invariant("scenario.initial_temp_C",
            std::isfinite(s.initial_temp_C) && s.initial_temp_C >= kAbsoluteZeroC,
            "must be finite and above absolute zero");
  invariant("scenario.sample_dt_s",
            std::isfinite(s.sample_dt_s) && s.sample_dt_s > 0.0, "must be > 0");
  return out;
}

void check_cog(const CogOffset& cog, const RobotParams& robot) {
  if (!(std::abs(cog.x_m) < robot.length_m / 2.0))
    throw Error(ErrorCode::kCogOutsideFootprint,
                "longitudinal offset must satisfy |x| < length/2",
                "scenario.cog_x_m");
  if (!(std::abs(cog.y_m) < robot.width_m / 2.0))
    throw Error(ErrorCode::kCogOutsideFootprint,
                "lateral offset must satisfy |y| < width/2", "scenario.cog_y_m");
}

}  // namespace mecanum_energy
