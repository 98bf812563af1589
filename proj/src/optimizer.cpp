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

#include "mecanum_energy/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

namespace mecanum_energy {
namespace {

Scenario at_speed(Scenario scenario, double v_m_s) {
  if (!(std::isfinite(v_m_s) && v_m_s > 0.0))
    throw Error(ErrorCode::kInvalidBracket,
                "speed must be positive, got " + std::to_string(v_m_s));
  scenario.sample_dt_s *= scenario.commanded_speed_m_s / v_m_s;
  scenario.commanded_speed_m_s = v_m_s;
  return scenario;
}

void check_bracket(double v_lo, double v_hi, double tol) {
  if (!(std::isfinite(v_lo) && std::isfinite(v_hi) && v_lo > 0.0 && v_lo < v_hi))
    throw Error(ErrorCode::kInvalidBracket,
                "need 0 < v_lo < v_hi, got [" + std::to_string(v_lo) + ", " +
                    std::to_string(v_hi) + "]");
  if (!(std::isfinite(tol) && tol > 0.0))
    throw Error(ErrorCode::kInvalidBracket, "tol must be > 0");
}

}  // namespace

double energy_of_speed(const Scenario& scenario, const ValidatedParams& params,
                       double v_m_s) {
  return simulate(at_speed(scenario, v_m_s), params).report.total_J;
}

std::vector<double> segment_energies_of_speed(const Scenario& scenario,
                                              const ValidatedParams& params,
                                              double v_m_s) {
  return simulate(at_speed(scenario, v_m_s), params).report.per_segment_J;
}

SpeedOptimum min_energy_speed(const std::function<double(double)>& energy,
                              double v_lo, double v_hi, double tol) {
  check_bracket(v_lo, v_hi, tol);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

  SpeedOptimum best;
  best.v_m_s = v_lo;
  best.energy_J = energy(v_lo);
  auto consider = [&](double v, double e) {
    if (e < best.energy_J) {
      best.v_m_s = v;
      best.energy_J = e;
    }
  };
  consider(v_hi, energy(v_hi));

  double a = v_lo;
  double b = v_hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = energy(c);
  double fd = energy(d);
  consider(c, fc);
  consider(d, fd);
  best.bracket_history.push_back({a, b});
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = energy(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = energy(d);
      consider(d, fd);
    }
    ++best.iterations;
    best.bracket_history.push_back({a, b});
  }
  return best;
}

SpeedOptimum min_energy_speed(const Scenario& scenario,
                              const ValidatedParams& params, double v_lo,
                              double v_hi, double tol) {
  return min_energy_speed(
      [&](double v) { return energy_of_speed(scenario, params, v); }, v_lo,
      v_hi, tol);
}

SpeedPlan per_segment_speeds(const Scenario& scenario,
                             const ValidatedParams& params, double v_lo,
                             double v_hi, double tol, std::size_t jobs) {
  check_bracket(v_lo, v_hi, tol);
  SpeedPlan plan;
  plan.single_speed = min_energy_speed(scenario, params, v_lo, v_hi, tol);
  const auto single_parts =
      segment_energies_of_speed(scenario, params, plan.single_speed.v_m_s);

  const std::size_t n = scenario.segments.size();
  plan.segments.resize(n);
  std::vector<std::exception_ptr> failures(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < n; j = next++) {
      try {
        plan.segments[j] = min_energy_speed(
            [&](double v) {
              return segment_energies_of_speed(scenario, params, v)[j];
            },
            v_lo, v_hi, tol);
      } catch (...) {
        failures[j] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, n);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  plan.v_m_s.resize(n);
  plan.iterations = plan.single_speed.iterations;
  for (std::size_t j = 0; j < n; ++j) {
    auto& seg = plan.segments[j];
    if (single_parts[j] <= seg.energy_J) {
      seg.v_m_s = plan.single_speed.v_m_s;
      seg.energy_J = single_parts[j];
    }
    plan.v_m_s[j] = seg.v_m_s;
    plan.predicted_energy_J += seg.energy_J;
    plan.iterations += seg.iterations;
  }

  plan.total_energy_J =
      simulate_plan(scenario, params, plan.v_m_s).report.total_J;
  plan.coupling_error = std::abs(plan.total_energy_J - plan.predicted_energy_J) /
                        plan.predicted_energy_J;
  return plan;
}

}  // namespace mecanum_energy
