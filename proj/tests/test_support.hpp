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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "mecanum_energy/types.hpp"

namespace mecanum_energy::testing {

// Flat 2 m, up 4 m at +gamma, flat 2 m, down 4 m at -gamma.
inline Scenario ramp_scenario(double gamma_deg = 10.0, double speed = 0.5,
                              double dt = 0.01) {
  Scenario s;
  s.commanded_speed_m_s = speed;
  s.sample_dt_s = dt;
  s.segments = {{2.0, 0.0, 1.0}, {4.0, gamma_deg, 1.0},
                {2.0, 0.0, 1.0}, {4.0, -gamma_deg, 1.0}};
  return s;
}

inline Scenario flat_scenario(double length = 4.0, double speed = 0.5,
                              double dt = 0.01) {
  Scenario s;
  s.commanded_speed_m_s = speed;
  s.sample_dt_s = dt;
  s.segments = {{length, 0.0, 1.0}};
  return s;
}

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void spit(const std::filesystem::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("mecanum_energy_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace mecanum_energy::testing
