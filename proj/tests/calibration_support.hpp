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

#include <random>
#include <vector>

#include "mecanum_energy/calibration.hpp"
#include "mecanum_energy/simulator.hpp"

namespace mecanum_energy::testing {

// Known coefficients used to synthesize measured traces. The winding stays at
// its initial temperature so the fit covers exactly the ten linear
// coefficients.
inline ModelParams calibration_truth() {
  ModelParams p;
  p.motor.tau = 0.03;
  p.motor.k_T_base = 15.0;
  p.motor.k_T_slope = 0.0;
  p.motor.beta_T_base = 1.0;
  p.motor.beta_T_slope = 0.0;
  p.motor.lambda1 = 40.0;
  p.motor.lambda2 = 2.0;
  p.motor.lambda3 = 0.02;
  for (auto& w : p.motor.wheels) w.forward = w.backward = {0.05, 0.1};
  p.friction.mu1 = 0.5;
  p.friction.mu2 = 0.5;
  p.thermal.heating_coeff_C_per_J = 0.0;
  return p;
}

inline std::vector<double> truth_vector(const ModelParams& p) {
  const auto& m = p.motor;
  const auto& w = m.wheels[0].forward;
  return {m.tau,     m.k_T_base, m.beta_T_base, m.lambda1, m.lambda2,
          m.lambda3, w.k1,       w.k2,          p.friction.mu1, p.friction.mu2};
}

// Routes with several junctions, varied speed, heading and CoG.
inline std::vector<Scenario> calibration_scenarios() {
  struct TraceSetup {
    double speed, heading_deg, cog_x, cog_y;
    std::vector<double> inclines;
  };
  const std::vector<TraceSetup> setups = {
      {0.5, 0.0, 0.0, 0.0, {0, 10, 0, -10, 4, 0}},
      {0.9, 30.0, 0.3, 0.15, {0, 6, 14, 2, -8, 0}},
      {0.3, -60.0, -0.3, -0.18, {0, 12, -4, 0, 8, -12}},
      {1.2, 135.0, 0.05, -0.1, {0, -6, 5, 15, 0, -3}},
      {0.7, -150.0, 0.2, -0.12, {0, 9, 0, 18, 6, -5}},
      {0.4, 80.0, -0.15, 0.2, {0, 4, 11, -2, 7, 0}},
      {1.0, 10.0, -0.25, 0.08, {0, 15, 3, -9, 12, 0}},
      {0.6, -100.0, 0.1, 0.18, {0, -4, 8, 0, 16, 5}},
  };
  std::vector<Scenario> out;
  for (const auto& s : setups) {
    Scenario sc;
    sc.commanded_speed_m_s = s.speed;
    sc.heading_deg = s.heading_deg;
    sc.cog = {s.cog_x, s.cog_y};
    sc.sample_dt_s = 0.0025;
    for (int lap = 0; lap < 8; ++lap)
      for (std::size_t i = 0; i < s.inclines.size(); ++i)
        sc.segments.push_back({2.0, s.inclines[i], i % 2 ? 1.3 : 1.0});
    out.push_back(sc);
  }
  return out;
}

// Simulated traces with multiplicative Gaussian noise on the motion power.
inline std::vector<CalibrationData> calibration_data(const ModelParams& truth,
                                                     double noise_sigma,
                                                     unsigned seed) {
  const auto params = validate_params(truth);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<CalibrationData> out;
  for (const auto& sc : calibration_scenarios()) {
    const auto sim = simulate(sc, params);
    CalibrationData d;
    for (const auto& s : sim.trace) {
      const double noise = noise_sigma > 0.0 ? noise_sigma * gauss(rng) : 0.0;
      d.trace.push_back({s.state.t_s, s.power.motion_W * (1.0 + noise)});
      d.states.push_back(s.state);
    }
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace mecanum_energy::testing
