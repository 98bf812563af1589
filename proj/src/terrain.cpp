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

#include "mecanum_energy/terrain.hpp"

#include <algorithm>

namespace mecanum_energy {
namespace {

std::vector<double> boundary_integral(const std::vector<double>& boundaries,
                                      const std::vector<double>& values) {
  std::vector<double> out(boundaries.size(), 0.0);
  for (std::size_t j = 0; j < values.size(); ++j)
    out[j + 1] = out[j] + values[j] * (boundaries[j + 1] - boundaries[j]);
  return out;
}

}  // namespace

TerrainProfile::TerrainProfile(const Scenario& scenario, double wheelbase_m)
    : wheelbase_m_(wheelbase_m) {
  if (scenario.segments.empty())
    throw Error(ErrorCode::kEmptyScenario, "scenario has no segments");
  boundaries_.push_back(0.0);
  for (const auto& seg : scenario.segments) {
    boundaries_.push_back(boundaries_.back() + seg.length_m);
    inclines_rad_.push_back(deg_to_rad(seg.incline_deg));
    friction_scales_.push_back(seg.friction_scale);
  }
  incline_integral_ = boundary_integral(boundaries_, inclines_rad_);
  friction_integral_ = boundary_integral(boundaries_, friction_scales_);
}

std::size_t TerrainProfile::segment_at(double s_m) const {
  const auto it =
      std::upper_bound(boundaries_.begin() + 1, boundaries_.end() - 1, s_m);
  return static_cast<std::size_t>(it - (boundaries_.begin() + 1));
}

std::size_t TerrainProfile::owning_segment(double s_m) const {
  return segment_at(s_m + wheelbase_m_ / 2.0);
}

double TerrainProfile::raw(const std::vector<double>& values, double u) const {
  return values[segment_at(u)];
}

double TerrainProfile::cumulative(const std::vector<double>& values,
                                  const std::vector<double>& integral,
                                  double u) const {
  if (u <= 0.0) return values.front() * u;
  const std::size_t j = segment_at(u);
  return integral[j] + values[j] * (u - boundaries_[j]);
}

double TerrainProfile::averaged(const std::vector<double>& values,
                                const std::vector<double>& integral,
                                double s) const {
  const double h = wheelbase_m_ / 2.0;
  return (cumulative(values, integral, s + h) -
          cumulative(values, integral, s - h)) /
         wheelbase_m_;
}

double TerrainProfile::incline_at(double s_m) const {
  return averaged(inclines_rad_, incline_integral_, s_m);
}

double TerrainProfile::incline_slope_at(double s_m) const {
  constexpr double kEps = 1e-9;
  const double h = wheelbase_m_ / 2.0;
  auto one_sided = [&](double s) {
    return (raw(inclines_rad_, s + h) - raw(inclines_rad_, s - h)) /
           wheelbase_m_;
  };
  return 0.5 * (one_sided(s_m - kEps) + one_sided(s_m + kEps));
}

double TerrainProfile::friction_scale_at(double s_m) const {
  return averaged(friction_scales_, friction_integral_, s_m);
}

}  // namespace mecanum_energy
