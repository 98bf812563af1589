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

#include "mecanum_energy/statics.hpp"

#include <algorithm>

namespace mecanum_energy {

ThermalState thermal_step(ThermalState state, double p_copper_W, double dt_s,
                          const ThermalParams& thermal) {
  if (!(dt_s > 0.0))
    throw Error(ErrorCode::kNonPositiveDt, "thermal step needs dt > 0");
  const double rate =
      thermal.heating_coeff_C_per_J * p_copper_W -
      thermal.cooling_coeff_per_s * (state.temp_C - thermal.ambient_C);
  state.temp_C = std::max(kAbsoluteZeroC, state.temp_C + dt_s * rate);
  return state;
}

double thermal_steady_state(double p_copper_W, const ThermalParams& thermal) {
  return thermal.ambient_C +
         thermal.heating_coeff_C_per_J * p_copper_W / thermal.cooling_coeff_per_s;
}

}  // namespace mecanum_energy
