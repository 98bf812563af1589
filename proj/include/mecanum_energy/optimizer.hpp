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
#include <functional>
#include <vector>

#include "mecanum_energy/simulator.hpp"
#include "mecanum_energy/types.hpp"

namespace mecanum_energy {

struct Bracket {
  double lo_m_s = 0.0;
  double hi_m_s = 0.0;
};

struct SpeedOptimum {
  double v_m_s = 0.0;
  double energy_J = 0.0;
  int iterations = 0;
  std::vector<Bracket> bracket_history;
};

/// Energy of the full route at constant speed v. The sample step is scaled by
/// commanded_speed / v so every speed sees the same arc-length grid.
double energy_of_speed(const Scenario& scenario, const ValidatedParams& params,
                       double v_m_s);

/// Energy attributed to each segment at constant speed v, same grid as above.
std::vector<double> segment_energies_of_speed(const Scenario& scenario,
                                              const ValidatedParams& params,
                                              double v_m_s);

/// Golden-section search of `energy` on [v_lo, v_hi] down to a bracket no
/// wider than tol. The result is the best point evaluated, endpoints
/// included, so it is never worse than either endpoint even when the
/// objective is not unimodal. Throws InvalidBracket.
SpeedOptimum min_energy_speed(const std::function<double(double)>& energy,
                              double v_lo, double v_hi, double tol);
SpeedOptimum min_energy_speed(const Scenario& scenario,
                              const ValidatedParams& params, double v_lo,
                              double v_hi, double tol);

struct SpeedPlan {
  std::vector<double> v_m_s;               // one per segment
  std::vector<SpeedOptimum> segments;      // independent per-segment searches
  double predicted_energy_J = 0.0;         // sum of independent optima
  double total_energy_J = 0.0;             // re-simulated at the plan
  double coupling_error = 0.0;             // |total - predicted| / predicted
  SpeedOptimum single_speed;
  int iterations = 0;
};

/// Optimizes each segment independently, then re-simulates the whole plan.
/// A segment keeps the single-speed optimum when that is cheaper for it, so
/// the predicted plan never costs more than the single-speed plan.
/// `jobs` > 1 runs the per-segment searches on worker threads; the result
/// does not depend on it. Throws InvalidBracket.
SpeedPlan per_segment_speeds(const Scenario& scenario,
                             const ValidatedParams& params, double v_lo,
                             double v_hi, double tol, std::size_t jobs = 1);

}  // namespace mecanum_energy
