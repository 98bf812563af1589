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

#include "mecanum_energy/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "mecanum_energy/config_io.hpp"

namespace mecanum_energy {
namespace {

constexpr Eigen::Index kIronBegin = 3;  // lambda1..lambda3 columns
constexpr Eigen::Index kIronCount = 3;

std::string param_key(std::string_view coefficient) {
  if (coefficient == "mu1" || coefficient == "mu2")
    return "friction." + std::string(coefficient);
  return "motor." + std::string(coefficient);
}

}  // namespace

RegressionProblem build_regressors(std::span<const MeasuredSample> trace,
                                   std::span<const MotionState> states) {
  if (trace.size() != states.size())
    throw Error(ErrorCode::kMisalignedTimestamps,
                "trace has " + std::to_string(trace.size()) +
                    " rows but states have " + std::to_string(states.size()));
  const auto rows = static_cast<Eigen::Index>(trace.size());
  RegressionProblem out;
  out.design.resize(rows, static_cast<Eigen::Index>(kCoefficientNames.size()));
  out.target.resize(rows);

  for (Eigen::Index k = 0; k < rows; ++k) {
    const auto& m = trace[static_cast<std::size_t>(k)];
    const auto& st = states[static_cast<std::size_t>(k)];
    if (std::abs(m.t_s - st.t_s) > 1e-6 * std::max(1.0, std::abs(m.t_s)))
      throw Error(ErrorCode::kMisalignedTimestamps,
                  "trace and states disagree at row " + std::to_string(k));

    const double t = st.t_model_s;
    const double av2 = st.accel_m_s2 * st.speed_m_s * st.speed_m_s;
    const double cos_theta = std::abs(std::cos(st.heading_rad));
    auto row = out.design.row(k);
    row(0) = st.f_up_N * st.f_up_N;
    row(1) = 1.0;
    row(2) = t;
    row(3) = st.wheel_speed_m_s.dot(st.wheel_accel_m_s2);
    row(4) = t * av2;
    row(5) = t * t * av2;
    row(6) = st.traction_N.squaredNorm();
    row(7) = st.omega_rad_s.cwiseAbs().dot(st.traction_N.cwiseAbs());
    row(8) = st.friction_scale * st.loads.n_N.dot(st.wheel_speed_m_s.cwiseAbs()) *
             cos_theta;
    row(9) = st.friction_scale * st.loads.total_N * std::abs(st.speed_m_s) *
             cos_theta * std::cos(st.incline_rad);
    if ((row.segment(kIronBegin, kIronCount).array() <= 0.0).all())
      row.segment(kIronBegin, kIronCount).setZero();
    out.target(k) = m.p_motion_W;
  }
  return out;
}

Eigen::MatrixXd thermal_regressors(std::span<const MotionState> states,
                                   double reference_temp_C) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(states.size()), 2);
  for (std::size_t k = 0; k < states.size(); ++k) {
    const double dT = states[k].temp_C - reference_temp_C;
    out(static_cast<Eigen::Index>(k), 0) = dT;
    out(static_cast<Eigen::Index>(k), 1) = states[k].t_model_s * dT;
  }
  return out;
}

Eigen::VectorXd solve_nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  const Eigen::Index n = a.cols();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  std::vector<bool> passive(static_cast<std::size_t>(n), false);
  const double tol = 10.0 * std::numeric_limits<double>::epsilon() *
                     a.cwiseAbs().colwise().sum().maxCoeff() *
                     static_cast<double>(std::max(a.rows(), n));

  auto solve_passive = [&]() {
    std::vector<Eigen::Index> cols;
    for (Eigen::Index j = 0; j < n; ++j)
      if (passive[static_cast<std::size_t>(j)]) cols.push_back(j);
    Eigen::MatrixXd sub(a.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
      sub.col(static_cast<Eigen::Index>(c)) = a.col(cols[c]);
    const Eigen::VectorXd zs = sub.colPivHouseholderQr().solve(b);
    Eigen::VectorXd z = Eigen::VectorXd::Zero(n);
    for (std::size_t c = 0; c < cols.size(); ++c)
      z(cols[c]) = zs(static_cast<Eigen::Index>(c));
    return z;
  };

  Eigen::VectorXd w = a.transpose() * (b - a * x);
  for (Eigen::Index outer = 0; outer < 3 * n + 10; ++outer) {
    Eigen::Index best = -1;
    for (Eigen::Index j = 0; j < n; ++j)
      if (!passive[static_cast<std::size_t>(j)] && w(j) > tol &&
          (best < 0 || w(j) > w(best)))
        best = j;
    if (best < 0) break;
    passive[static_cast<std::size_t>(best)] = true;

    for (Eigen::Index inner = 0; inner <= n; ++inner) {
      const Eigen::VectorXd z = solve_passive();
      double alpha = std::numeric_limits<double>::infinity();
      for (Eigen::Index j = 0; j < n; ++j)
        if (passive[static_cast<std::size_t>(j)] && z(j) <= 0.0)
          alpha = std::min(alpha, x(j) / (x(j) - z(j)));
      if (!std::isfinite(alpha)) {
        x = z;
        break;
      }
      x += alpha * (z - x);
      for (Eigen::Index j = 0; j < n; ++j)
        if (passive[static_cast<std::size_t>(j)] && x(j) <= tol) {
          passive[static_cast<std::size_t>(j)] = false;
          x(j) = 0.0;
        }
    }
    w = a.transpose() * (b - a * x);
  }
  return x;
}

double model_accuracy(std::span<const double> predicted_W,
                      std::span<const double> measured_W) {
  if (predicted_W.size() != measured_W.size())
    throw Error(ErrorCode::kLengthMismatch,
                "predicted and measured series differ in length");
  double abs_error = 0.0;
  double total = 0.0;
  for (std::size_t k = 0; k < measured_W.size(); ++k) {
    abs_error += std::abs(predicted_W[k] - measured_W[k]);
    total += measured_W[k];
  }
  if (!(total > 0.0))
    throw Error(ErrorCode::kZeroMeasurement, "measured power must have a positive mean");
  return std::max(0.0, 100.0 * (1.0 - abs_error / total));
}

FitResult fit_coefficients(std::span<const CalibrationData> data,
                           const FitOptions& options) {
  std::vector<RegressionProblem> parts;
  std::vector<Eigen::MatrixXd> thermal_parts;
  Eigen::Index rows = 0;
  double t_min = std::numeric_limits<double>::infinity();
  double t_max = -std::numeric_limits<double>::infinity();
  for (const auto& d : data) {
    parts.push_back(build_regressors(d.trace, d.states));
    thermal_parts.push_back(thermal_regressors(d.states, options.reference_temp_C));
    rows += parts.back().design.rows();
    for (const auto& st : d.states) {
      t_min = std::min(t_min, st.temp_C);
      t_max = std::max(t_max, st.temp_C);
    }
  }

  std::vector<std::string> names(kCoefficientNames.begin(), kCoefficientNames.end());
  FitResult result;
  const bool fit_thermal = rows > 0 && t_max - t_min >= options.thermal_span_C;
  if (fit_thermal) {
    names.insert(names.end(), kThermalCoefficientNames.begin(),
                 kThermalCoefficientNames.end());
  } else {
    result.pinned.assign(kThermalCoefficientNames.begin(),
                         kThermalCoefficientNames.end());
  }
  const auto cols = static_cast<Eigen::Index>(names.size());
  if (rows < 10 * cols)
    throw Error(ErrorCode::kTooFewSamples,
                "need at least " + std::to_string(10 * cols) +
                    " samples for " + std::to_string(cols) +
                    " coefficients, got " + std::to_string(rows));

  Eigen::MatrixXd design(rows, cols);
  Eigen::VectorXd target(rows);
  Eigen::Index offset = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const Eigen::Index r = parts[p].design.rows();
    design.block(offset, 0, r, 10) = parts[p].design;
    if (fit_thermal) design.block(offset, 10, r, 2) = thermal_parts[p];
    target.segment(offset, r) = parts[p].target;
    offset += r;
  }

  // Column scaling; zero columns are unidentifiable outright.
  const Eigen::VectorXd norms = design.colwise().norm().transpose();
  std::vector<std::string> unidentifiable;
  for (Eigen::Index j = 0; j < cols; ++j)
    if (!(norms(j) > 0.0)) unidentifiable.push_back(names[static_cast<std::size_t>(j)]);
  if (!unidentifiable.empty())
    throw RankDeficientError(unidentifiable,
                             static_cast<int>(cols) -
                                 static_cast<int>(unidentifiable.size()));

  const Eigen::MatrixXd scaled = design * norms.cwiseInverse().asDiagonal();
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(scaled);
  qr.setThreshold(options.rank_tolerance);
  result.rank = static_cast<int>(qr.rank());
  if (result.rank < cols) {
    const auto& perm = qr.colsPermutation().indices();
    for (Eigen::Index j = result.rank; j < cols; ++j)
      unidentifiable.push_back(names[static_cast<std::size_t>(perm(j))]);
    throw RankDeficientError(unidentifiable, result.rank);
  }

  const Eigen::VectorXd sv =
      Eigen::JacobiSVD<Eigen::MatrixXd>(scaled).singularValues();
  result.condition_number = sv(0) / sv(sv.size() - 1);

  const Eigen::VectorXd coef = solve_nnls(scaled, target).cwiseQuotient(norms);
  for (Eigen::Index j = 0; j < cols; ++j)
    result.coefficients[names[static_cast<std::size_t>(j)]] = coef(j);
  for (const auto& name : result.pinned) result.coefficients[name] = 0.0;

  result.samples = static_cast<std::size_t>(rows);
  result.predicted_W.resize(static_cast<std::size_t>(rows));
  result.measured_W.resize(static_cast<std::size_t>(rows));
  double sq = 0.0;
  for (Eigen::Index k = 0; k < rows; ++k) {
    const auto row = design.row(k);
    const double iron = row.segment(kIronBegin, kIronCount)
                            .dot(coef.segment(kIronBegin, kIronCount));
    const double pred = row.dot(coef) - iron + std::max(0.0, iron);
    result.predicted_W[static_cast<std::size_t>(k)] = pred;
    result.measured_W[static_cast<std::size_t>(k)] = target(k);
    sq += (pred - target(k)) * (pred - target(k));
  }
  result.residual_rms_W = std::sqrt(sq / static_cast<double>(rows));
  result.accuracy_pct = model_accuracy(result.predicted_W, result.measured_W);
  return result;
}

ModelParams apply_fit(ModelParams params, const FitResult& fit) {
  auto get = [&](const char* name) { return fit.coefficients.at(name); };
  auto& m = params.motor;
  m.tau = get("tau");
  m.k_T_base = get("k_T_base");
  m.beta_T_base = get("beta_T_base");
  m.lambda1 = get("lambda1");
  m.lambda2 = get("lambda2");
  m.lambda3 = get("lambda3");
  m.k_T_slope = get("k_T_slope");
  m.beta_T_slope = get("beta_T_slope");
  for (auto& w : m.wheels) {
    w.forward = w.backward = MechanicalCoefficients{get("k1"), get("k2")};
  }
  params.friction.mu1 = get("mu1");
  params.friction.mu2 = get("mu2");
  return params;
}

std::string serialize_fit(const FitResult& fit) {
  std::string out;
  out += "# fit.samples = " + std::to_string(fit.samples) + "\n";
  out += "# fit.rank = " + std::to_string(fit.rank) + "\n";
  out += "# fit.residual_rms_W = " + format_exact(fit.residual_rms_W) + "\n";
  out += "# fit.accuracy_pct = " + format_exact(fit.accuracy_pct) + "\n";
  out += "# fit.condition_number = " + format_exact(fit.condition_number) + "\n";
  if (!fit.pinned.empty()) {
    out += "# fit.pinned =";
    for (const auto& name : fit.pinned) out += " " + name;
    out += "\n";
  }
  auto line = [&](std::string_view name) {
    out += param_key(name) + " = " +
           format_exact(fit.coefficients.at(std::string(name))) + "\n";
  };
  for (auto name : kCoefficientNames) line(name);
  for (auto name : kThermalCoefficientNames) line(name);
  return out;
}

}  // namespace mecanum_energy
