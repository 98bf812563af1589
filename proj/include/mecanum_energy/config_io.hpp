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

#include <map>
#include <string>
#include <string_view>

#include "mecanum_energy/types.hpp"

namespace mecanum_energy {

// Flat namespaced key-value text, one `key = value` per line, `#` starts a
// comment. Segment lists are indexed groups: `segment.0.length_m = 4`.

using KeyValueMap = std::map<std::string, std::string>;

/// Throws ParseError (field = "line N") on malformed or duplicate entries.
KeyValueMap parse_key_values(std::string_view text);

/// Parameter text to a bundle. Every key is optional; missing keys keep the
/// defaults of ModelParams. `motor.k1` / `motor.k2` set all motors in both
/// directions before any per-wheel `motor.<FL|FR|RL|RR>.k{1,2}_{forward,
/// backward}` override. Does not check ranges, see validate_params.
ModelParams load_params(std::string_view text);
std::string serialize_params(const ModelParams& params);

/// Fills every absent scenario key with its default. Idempotent.
KeyValueMap apply_scenario_defaults(KeyValueMap values);

/// Throws ParseError, MissingField (a segment without length_m, or no
/// segments at all) or InvariantViolation.
Scenario load_scenario(std::string_view text);
std::string serialize_scenario(const Scenario& scenario);

/// Shortest decimal form that parses back to the same double.
std::string format_exact(double value);

}  // namespace mecanum_energy
