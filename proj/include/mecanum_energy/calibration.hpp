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
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "mecanum_energy/simulator.hpp"
#include "mecanum_energy/types.hpp"

namespace mecanum_energy {

// Coefficients the motion power is linear in, in regressor column order.
inline constexpr std::array<std::string_view, 10> kCoefficientNames{
    "tau",     "k_T_base", "beta_T_base", "lambda1", "lambda2",
    "lambda3", "k1",       "k2",          "mu1",     "mu2"};
inline constexpr std::array<std::string_view, 2> kThermalCoefficientNames{
    "k_T_slope", "beta_T_slope"};

struct MeasuredSample {
  double t_s = 0.0;
  double p_motion_W = 0.0;
};

/// Design matrix (one row per sample) and measured motion power.
struct RegressionProblem {
  Eigen::MatrixXd design;
  Eigen::VectorXd target;
};

/// Columns, per sample:
///   F_up^2, 1, t, sum v_i a_i, t a v^2, t^2 a v^2, sum F_i^2,
///   sum |omega_i| |F_i|, s sum N_i |v_i| |cos theta|, s N |v| |cos theta| cos gamma
/// with t the model time and s the friction scale. The three iron columns are
/// zeroed on rows where all of them are <= 0, which is exactly the clamp for
/// non-negative lambdas. Throws MisalignedTimestamps.
RegressionProblem build_regressors(std::span<const MeasuredSample> trace,
                                   std::span<const MotionState> states);

/// Temperature columns (T - T0) and t (T - T0) for the k and beta slopes.
Eigen::MatrixXd thermal_regressors(std::span<const MotionState> states,
                                   double reference_temp_C);

/// One aligned measured trace with its kinematic/load states.
struct CalibrationData {
  std::vector<MeasuredSample> trace;
  std::vector<MotionState> states;
};

struct FitOptions {
  double reference_temp_C = 25.0;
  // Temperature slopes are fitted only when the data spans at least this much.
  double thermal_span_C = 10.0;
  // Relative pivot threshold of the column-scaled QR used for the rank test.
  double rank_tolerance = 1e-10;
};

struct FitResult {
  std::map<std::string, double> coefficients;
  double residual_rms_W = 0.0;
  double accuracy_pct = 0.0;
  double condition_number = 0.0;
  int rank = 0;
  std::size_t samples = 0;
  std::vector<std::string> pinned;  // coefficients held at zero
  std::vector<double> predicted_W;  // in input order
  std::vector<double> measured_W;
};

/// Non-negative least squares fit of the motion-power coefficients.
/// Throws TooFewSamples (< 10 rows per coefficient) and RankDeficientError
/// naming the unidentifiable columns.
FitResult fit_coefficients(std::span<const CalibrationData> data,
                           const FitOptions& options = {});

/// Lawson-Hanson active-set solution of min ||A x - b|| subject to x >= 0.
Eigen::VectorXd solve_nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b);

/// 100 (1 - sum |pred - meas| / sum meas), floored at 0. Throws
/// LengthMismatch and ZeroMeasurement (sum of measurements <= 0).
double model_accuracy(std::span<const double> predicted_W,
                      std::span<const double> measured_W);

/// Writes fitted coefficients into a parameter bundle (uniform k1/k2 across
/// motors and directions).
ModelParams apply_fit(ModelParams params, const FitResult& fit);

/// Coefficient file in the parameter key-value format; fit statistics are
/// emitted as comments.
std::string serialize_fit(const FitResult& fit);

}  // namespace mecanum_energy
