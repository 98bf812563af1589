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

#include <string>
#include <string_view>
#include <vector>

#include "mecanum_energy/calibration.hpp"
#include "mecanum_energy/simulator.hpp"

namespace mecanum_energy {

inline constexpr std::string_view kTraceCsvHeader =
    "t_s,s_m,gamma_deg,vx,vy,wz,T_C,P_copper_W,P_iron_W,P_mech_W,P_fric_W,"
    "P_motion_W,P_ctrl_W,P_sense_W,P_total_W,E_cum_J";

// Motion states accompanying a trace, consumed by `fit`. Written losslessly.
inline constexpr std::string_view kStatesCsvHeader =
    "t_s,t_model_s,s_m,gamma_deg,theta_deg,friction_scale,v_m_s,a_m_s2,F_up_N,"
    "v_FL,v_FR,v_RL,v_RR,a_FL,a_FR,a_RL,a_RR,"
    "omega_FL,omega_FR,omega_RL,omega_RR,F_FL,F_FR,F_RL,F_RR,"
    "N_FL,N_FR,N_RL,N_RR,T_C";

/// One row per sample, 9 significant digits, header exactly kTraceCsvHeader.
std::string write_trace_csv(const PowerTrace& trace);
std::string write_states_csv(const PowerTrace& trace);

/// Reads t_s and P_motion_W from a trace CSV. The header must match
/// kTraceCsvHeader. Throws ParseError.
std::vector<MeasuredSample> read_trace_csv(std::string_view text);
std::vector<MotionState> read_states_csv(std::string_view text);

/// EnergyReport as key-value text.
std::string write_report(const EnergyReport& report);

/// gnuplot script plotting the per-channel power columns of `csv_path`.
std::string write_gnuplot_script(std::string_view csv_path);

}  // namespace mecanum_energy
