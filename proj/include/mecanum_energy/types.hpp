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

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "mecanum_energy/error.hpp"

namespace mecanum_energy {

// Wheel order is fixed throughout: front-left, front-right, rear-left,
// rear-right, rollers in X configuration.
enum class Wheel : std::size_t {
  kFrontLeft = 0,
  kFrontRight = 1,
  kRearLeft = 2,
  kRearRight = 3,
};

inline constexpr std::size_t kWheelCount = 4;
inline constexpr std::array<std::string_view, kWheelCount> kWheelNames{
    "FL", "FR", "RL", "RR"};

template <typename Scalar>
using WheelVector = Eigen::Matrix<Scalar, 4, 1>;
using WheelVectord = WheelVector<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kAbsoluteZeroC = -273.15;

inline constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

struct RobotParams {
  double mass_kg = 12.0;
  double length_m = 0.86;  // wheelbase, front to rear
  double width_m = 0.52;   // track, left to right
  double wheel_radius_m = 0.076;
  double gravity_m_s2 = 9.81;
  double supply_voltage_V = 24.0;

  bool operator==(const RobotParams&) const = default;
};

struct MechanicalCoefficients {
  double k1 = 0.0019;  // force-squared term
  double k2 = 1.5223;  // speed-force term

  bool operator==(const MechanicalCoefficients&) const = default;
};

/// Mechanical output coefficients of one motor, selected by the sign of the
/// wheel's rotation.
struct WheelMotorTable {
  MechanicalCoefficients forward;
  MechanicalCoefficients backward;

  const MechanicalCoefficients& for_rotation(double omega_rad_s) const {
    return omega_rad_s < 0.0 ? backward : forward;
  }

  bool operator==(const WheelMotorTable&) const = default;
};

struct MotorParams {
  double R0_ohm = 1.0;
  double T0_C = 25.0;
  double alpha_per_C = 0.00393;
  double tau = 0.02;
  double k_T_base = 0.5;
  double k_T_slope = 0.01;
  double beta_T_base = 0.001;
  double beta_T_slope = 0.0;
  double lambda1 = 2.0;
  double lambda2 = 0.5;
  double lambda3 = 0.05;
  std::array<WheelMotorTable, kWheelCount> wheels{};
  std::optional<double> armature_current_A;
  std::optional<double> emf_V;

  /// Affine speed-energy factor k(T), floored at zero.
  double k_at(double temp_C) const;
  /// Affine temperature-energy coefficient beta(T), floored at zero.
  double beta_at(double temp_C) const;

  bool operator==(const MotorParams&) const = default;
};

struct FrictionParams {
  double mu = 0.1;     // slope friction factor
  double mu1 = 0.001;  // per-wheel roller friction
  double mu2 = 0.002;  // body-level friction

  bool operator==(const FrictionParams&) const = default;
};

struct ThermalParams {
  double ambient_C = 25.0;
  double heating_coeff_C_per_J = 0.002;
  double cooling_coeff_per_s = 0.001;

  bool operator==(const ThermalParams&) const = default;
};

struct SensingParams {
  double idle_W = 1.0;
  double energy_per_sample_J = 0.02;
  double sample_rate_hz = 25.0;

  bool operator==(const SensingParams&) const = default;
};

struct ControlParams {
  double base_W = 2.0;
  double per_command_J = 0.001;
  double command_rate_hz = 100.0;

  bool operator==(const ControlParams&) const = default;
};

/// Which angle enters the along-slope gravity component.
///  - kPhysicalCos: m g cos(theta_fall) sin(gamma), theta_fall measured from
///    the fall line (straight uphill feels the full component).
///  - kLiteralSin: m g sin(theta) sin(gamma) with theta the body-frame heading.
enum class GravityConvention { kPhysicalCos, kLiteralSin };

std::string_view to_string(GravityConvention convention);

struct ModelOptions {
  GravityConvention gravity_convention = GravityConvention::kPhysicalCos;
  // Elapsed time fed to the time-dependent loss terms is capped here when set.
  std::optional<double> time_saturation_s;

  bool operator==(const ModelOptions&) const = default;
};

struct ModelParams {
  RobotParams robot;
  MotorParams motor;
  FrictionParams friction;
  ThermalParams thermal;
  SensingParams sensing;
  ControlParams control;
  ModelOptions options;

  bool operator==(const ModelParams&) const = default;
};

/// Every violated invariant of `params`, at most one per field, in a fixed
/// order. Empty when the bundle is valid.
std::vector<Violation> check_params(const ModelParams& params);

/// A parameter bundle that passed `check_params`. Immutable.
class ValidatedParams {
 public:
  const ModelParams& get() const noexcept { return params_; }
  const ModelParams* operator->() const noexcept { return &params_; }

 private:
  friend ValidatedParams validate_params(const ModelParams& params);
  explicit ValidatedParams(const ModelParams& params) : params_(params) {}

  ModelParams params_;
};

/// Throws ValidationError listing every violation.
ValidatedParams validate_params(const ModelParams& params);

struct CogOffset {
  double x_m = 0.0;  // + toward front
  double y_m = 0.0;  // + toward left

  bool operator==(const CogOffset&) const = default;
};

struct TerrainSegment {
  double length_m = 0.0;
  double incline_deg = 0.0;  // + uphill
  double friction_scale = 1.0;

  bool operator==(const TerrainSegment&) const = default;
};

struct Scenario {
  std::vector<TerrainSegment> segments;
  double commanded_speed_m_s = 0.5;
  double heading_deg = 0.0;
  CogOffset cog;
  double initial_temp_C = 25.0;
  double sample_dt_s = 0.01;

  double total_length_m() const;

  bool operator==(const Scenario&) const = default;
};

/// Scenario invariants that do not depend on the robot.
std::vector<Violation> check_scenario(const Scenario& scenario);

/// Throws CogOutsideFootprint unless |x| < L1/2 and |y| < L2/2.
void check_cog(const CogOffset& cog, const RobotParams& robot);

}  // namespace mecanum_energy
