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

#include <ostream>
#include <string>
#include <vector>

#include "mecanum_energy/error.hpp"

namespace mecanum_energy {

enum class ExitStatus : int {
  kSuccess = 0,
  kValidation = 1,
  kIo = 2,
  kNumerical = 3,
};

ExitStatus exit_status_for(ErrorCode code);

/// Runs the command line (without the program name). Diagnostics go to `err`,
/// results not written to files go to `out`. Output files are written only
/// after every result has been computed, each through a temporary file and a
/// rename, so a failing run leaves none behind.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace mecanum_energy
