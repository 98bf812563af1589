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

#include "mecanum_energy/config_io.hpp"

#include <charconv>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <system_error>
#include <vector>

namespace mecanum_energy {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(const std::string& key, const std::string& text) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw Error(ErrorCode::kParseError,
                "value '" + text + "' for " + key + " is not a number", key);
  return value;
}

struct NumericField {
  std::string_view key;
  double& (*ref)(ModelParams&);
};

#define ME_FIELD(key, member) \
  NumericField { key, [](ModelParams& p) -> double& { return p.member; } }

const std::vector<NumericField>& numeric_fields() {
  static const std::vector<NumericField> fields = {
      ME_FIELD("robot.mass_kg", robot.mass_kg),
      ME_FIELD("robot.length_m", robot.length_m),
      ME_FIELD("robot.width_m", robot.width_m),
      ME_FIELD("robot.wheel_radius_m", robot.wheel_radius_m),
      ME_FIELD("robot.gravity_m_s2", robot.gravity_m_s2),
      ME_FIELD("robot.supply_voltage_V", robot.supply_voltage_V),
      ME_FIELD("motor.R0_ohm", motor.R0_ohm),
      ME_FIELD("motor.T0_C", motor.T0_C),
      ME_FIELD("motor.alpha_per_C", motor.alpha_per_C),
      ME_FIELD("motor.tau", motor.tau),
      ME_FIELD("motor.k_T_base", motor.k_T_base),
      ME_FIELD("motor.k_T_slope", motor.k_T_slope),
      ME_FIELD("motor.beta_T_base", motor.beta_T_base),
      ME_FIELD("motor.beta_T_slope", motor.beta_T_slope),
      ME_FIELD("motor.lambda1", motor.lambda1),
      ME_FIELD("motor.lambda2", motor.lambda2),
      ME_FIELD("motor.lambda3", motor.lambda3),
      ME_FIELD("friction.mu", friction.mu),
      ME_FIELD("friction.mu1", friction.mu1),
      ME_FIELD("friction.mu2", friction.mu2),
      ME_FIELD("thermal.ambient_C", thermal.ambient_C),
      ME_FIELD("thermal.heating_coeff_C_per_J", thermal.heating_coeff_C_per_J),
      ME_FIELD("thermal.cooling_coeff_per_s", thermal.cooling_coeff_per_s),
      ME_FIELD("sensing.idle_W", sensing.idle_W),
      ME_FIELD("sensing.energy_per_sample_J", sensing.energy_per_sample_J),
      ME_FIELD("sensing.sample_rate_hz", sensing.sample_rate_hz),
      ME_FIELD("control.base_W", control.base_W),
      ME_FIELD("control.per_command_J", control.per_command_J),
      ME_FIELD("control.command_rate_hz", control.command_rate_hz),
  };
  return fields;
}

#undef ME_FIELD

std::string wheel_key(std::size_t wheel, std::string_view suffix) {
  return "motor." + std::string(kWheelNames[wheel]) + "." + std::string(suffix);
}

double& wheel_coefficient(ModelParams& p, std::size_t wheel,
                          std::string_view suffix) {
  auto& table = p.motor.wheels[wheel];
  if (suffix == "k1_forward") return table.forward.k1;
  if (suffix == "k2_forward") return table.forward.k2;
  if (suffix == "k1_backward") return table.backward.k1;
  return table.backward.k2;
}

constexpr std::array<std::string_view, 4> kWheelSuffixes{
    "k1_forward", "k2_forward", "k1_backward", "k2_backward"};

}  // namespace

std::string format_exact(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ec == std::errc{} ? ptr : buf);
}

KeyValueMap parse_key_values(std::string_view text) {
  KeyValueMap out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const std::string where = "line " + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorCode::kParseError, where + ": expected 'key = value'",
                  where);
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty() || value.empty())
      throw Error(ErrorCode::kParseError, where + ": empty key or value", where);
    if (!out.emplace(key, value).second)
      throw Error(ErrorCode::kParseError,
                  where + ": duplicate key '" + key + "'", key);
  }
  return out;
}

ModelParams load_params(std::string_view text) {
  const KeyValueMap values = parse_key_values(text);
  ModelParams p;
  std::set<std::string> consumed;

  auto take = [&](const std::string& key) -> std::optional<double> {
    const auto it = values.find(key);
    if (it == values.end()) return std::nullopt;
    consumed.insert(key);
    return parse_number(key, it->second);
  };

  for (const auto& field : numeric_fields())
    if (auto v = take(std::string(field.key))) field.ref(p) = *v;

  if (auto k1 = take("motor.k1"))
    for (auto& w : p.motor.wheels) w.forward.k1 = w.backward.k1 = *k1;
  if (auto k2 = take("motor.k2"))
    for (auto& w : p.motor.wheels) w.forward.k2 = w.backward.k2 = *k2;
  for (std::size_t i = 0; i < kWheelCount; ++i)
    for (auto suffix : kWheelSuffixes)
      if (auto v = take(wheel_key(i, suffix))) wheel_coefficient(p, i, suffix) = *v;

  if (auto v = take("motor.armature_current_A")) p.motor.armature_current_A = v;
  if (auto v = take("motor.emf_V")) p.motor.emf_V = v;
  if (auto v = take("model.time_saturation_s")) p.options.time_saturation_s = v;

  if (const auto it = values.find("model.gravity_convention");
      it != values.end()) {
    consumed.insert(it->first);
    if (it->second == "physical_cos") {
      p.options.gravity_convention = GravityConvention::kPhysicalCos;
    } else if (it->second == "literal_sin") {
      p.options.gravity_convention = GravityConvention::kLiteralSin;
    } else {
      throw Error(ErrorCode::kParseError,
                  "model.gravity_convention must be physical_cos or literal_sin",
                  it->first);
    }
  }

  for (const auto& [key, value] : values)
    if (!consumed.contains(key))
      throw Error(ErrorCode::kParseError, "unknown key '" + key + "'", key);
  return p;
}

std::string serialize_params(const ModelParams& params) {
  ModelParams p = params;
  std::string out;
  auto line = [&](std::string_view key, double v) {
    out += key;
    out += " = ";
    out += format_exact(v);
    out += '\n';
  };
  for (const auto& field : numeric_fields()) line(field.key, field.ref(p));
  for (std::size_t i = 0; i < kWheelCount; ++i)
    for (auto suffix : kWheelSuffixes)
      line(wheel_key(i, suffix), wheel_coefficient(p, i, suffix));
  if (p.motor.armature_current_A)
    line("motor.armature_current_A", *p.motor.armature_current_A);
  if (p.motor.emf_V) line("motor.emf_V", *p.motor.emf_V);
  out += "model.gravity_convention = ";
  out += to_string(p.options.gravity_convention);
  out += '\n';
  if (p.options.time_saturation_s)
    line("model.time_saturation_s", *p.options.time_saturation_s);
  return out;
}

namespace {

const std::vector<std::pair<std::string_view, double>>& scenario_defaults() {
  static const Scenario defaults;
  static const std::vector<std::pair<std::string_view, double>> table = {
      {"scenario.commanded_speed_m_s", defaults.commanded_speed_m_s},
      {"scenario.heading_deg", defaults.heading_deg},
      {"scenario.cog_x_m", defaults.cog.x_m},
      {"scenario.cog_y_m", defaults.cog.y_m},
      {"scenario.initial_temp_C", defaults.initial_temp_C},
      {"scenario.sample_dt_s", defaults.sample_dt_s},
  };
  return table;
}

// Parses "segment.<index>.<name>"; returns false for other keys.
bool split_segment_key(const std::string& key, std::size_t& index,
                       std::string& name) {
  constexpr std::string_view prefix = "segment.";
  if (!key.starts_with(prefix)) return false;
  const auto dot = key.find('.', prefix.size());
  if (dot == std::string::npos) return false;
  const std::string_view digits =
      std::string_view(key).substr(prefix.size(), dot - prefix.size());
  if (digits.empty()) return false;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return false;
  name = key.substr(dot + 1);
  return true;
}

}  // namespace

KeyValueMap apply_scenario_defaults(KeyValueMap values) {
  for (const auto& [key, value] : scenario_defaults())
    values.try_emplace(std::string(key), format_exact(value));

  std::set<std::size_t> indices;
  for (const auto& [key, value] : values) {
    std::size_t index = 0;
    std::string name;
    if (split_segment_key(key, index, name)) indices.insert(index);
  }
  for (std::size_t index : indices) {
    const std::string prefix = "segment." + std::to_string(index) + ".";
    values.try_emplace(prefix + "incline_deg", "0");
    values.try_emplace(prefix + "friction_scale", "1");
  }
  return values;
}

Scenario load_scenario(std::string_view text) {
  const KeyValueMap values = apply_scenario_defaults(parse_key_values(text));
  Scenario s;
  std::set<std::string> consumed;
  auto number = [&](const std::string& key) {
    consumed.insert(key);
    return parse_number(key, values.at(key));
  };

  s.commanded_speed_m_s = number("scenario.commanded_speed_m_s");
  s.heading_deg = number("scenario.heading_deg");
  s.cog.x_m = number("scenario.cog_x_m");
  s.cog.y_m = number("scenario.cog_y_m");
  s.initial_temp_C = number("scenario.initial_temp_C");
  s.sample_dt_s = number("scenario.sample_dt_s");

  std::map<std::size_t, TerrainSegment> segments;
  std::map<std::size_t, bool> has_length;
  for (const auto& [key, value] : values) {
    std::size_t index = 0;
    std::string name;
    if (!split_segment_key(key, index, name)) continue;
    auto& seg = segments[index];
    if (name == "length_m") {
      seg.length_m = number(key);
      has_length[index] = true;
    } else if (name == "incline_deg") {
      seg.incline_deg = number(key);
    } else if (name == "friction_scale") {
      seg.friction_scale = number(key);
    } else {
      continue;  // reported as unknown below
    }
  }

  for (const auto& [key, value] : values)
    if (!consumed.contains(key))
      throw Error(ErrorCode::kParseError, "unknown key '" + key + "'", key);

  if (segments.empty())
    throw Error(ErrorCode::kMissingField, "scenario has no segments",
                "segment.0.length_m");
  std::size_t expected = 0;
  for (const auto& [index, seg] : segments) {
    if (index != expected)
      throw Error(ErrorCode::kMissingField,
                  "segment indices must be contiguous from 0",
                  "segment." + std::to_string(expected) + ".length_m");
    if (!has_length[index])
      throw Error(ErrorCode::kMissingField, "segment without length",
                  "segment." + std::to_string(index) + ".length_m");
    s.segments.push_back(seg);
    ++expected;
  }

  if (auto violations = check_scenario(s); !violations.empty()) {
    const auto& v = violations.front();
    throw Error(ErrorCode::kInvariantViolation, v.field + ": " + v.message,
                v.field);
  }
  return s;
}

std::string serialize_scenario(const Scenario& s) {
  std::string out;
  auto line = [&](const std::string& key, double v) {
    out += key + " = " + format_exact(v) + "\n";
  };
  line("scenario.commanded_speed_m_s", s.commanded_speed_m_s);
  line("scenario.heading_deg", s.heading_deg);
  line("scenario.cog_x_m", s.cog.x_m);
  line("scenario.cog_y_m", s.cog.y_m);
  line("scenario.initial_temp_C", s.initial_temp_C);
  line("scenario.sample_dt_s", s.sample_dt_s);
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const std::string prefix = "segment." + std::to_string(i) + ".";
    line(prefix + "length_m", s.segments[i].length_m);
    line(prefix + "incline_deg", s.segments[i].incline_deg);
    line(prefix + "friction_scale", s.segments[i].friction_scale);
  }
  return out;
}

}  // namespace mecanum_energy
