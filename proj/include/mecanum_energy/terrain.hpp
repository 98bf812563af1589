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
#include <vector>

#include "mecanum_energy/types.hpp"

namespace mecanum_energy {

/// Piecewise terrain seen by a rigid body of the given wheelbase.
///
/// The raw profile is piecewise constant per segment. Effective quantities at
/// arc position s are the average of the raw profile over [s - L1/2, s + L1/2],
/// so an isolated junction ramps linearly over exactly one wheelbase and
/// reaches the mean of both inclines at the junction itself. Beyond the ends
/// the first and last segments are extended.
class TerrainProfile {
 public:
  TerrainProfile(const Scenario& scenario, double wheelbase_m);

  double total_length_m() const { return boundaries_.back(); }
  std::size_t segment_count() const { return inclines_rad_.size(); }
  double segment_start_m(std::size_t index) const { return boundaries_[index]; }

  double incline_at(double s_m) const;
  /// d(incline_at)/ds, exact for the moving average. At the breakpoints
  /// (junction +/- L1/2) it returns the mean of the one-sided slopes, so
  /// samples landing there do not flip sides with rounding.
  double incline_slope_at(double s_m) const;
  double friction_scale_at(double s_m) const;

  /// Index of the raw segment containing s (right-continuous, clamped).
  std::size_t segment_at(double s_m) const;
  /// Segment under the front axle. A junction transition belongs to the
  /// downstream segment.
  std::size_t owning_segment(double s_m) const;

 private:
  double raw(const std::vector<double>& values, double u) const;
  double cumulative(const std::vector<double>& values,
                    const std::vector<double>& integral, double u) const;
  double averaged(const std::vector<double>& values,
                  const std::vector<double>& integral, double s) const;

  double wheelbase_m_;
  std::vector<double> boundaries_;  // size n + 1, boundaries_[0] = 0
  std::vector<double> inclines_rad_;
  std::vector<double> friction_scales_;
  std::vector<double> incline_integral_;   // at each boundary
  std::vector<double> friction_integral_;  // at each boundary
};

}  // namespace mecanum_energy
