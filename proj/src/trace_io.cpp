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

#include "mecanum_energy/trace_io.hpp"

#include <charconv>
#include <cstdio>
#include <system_error>

#include "mecanum_energy/config_io.hpp"

namespace mecanum_energy {
namespace {

void append_g9(std::string& out, double v) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.9g", v);
  out.append(buf, static_cast<std::size_t>(n));
}

void append_exact(std::string& out, double v) { out += format_exact(v); }

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = line.find(sep, pos);
    out.push_back(line.substr(pos, next == std::string_view::npos
                                       ? std::string_view::npos
                                       : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  for (auto line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

double to_double(std::string_view cell, std::size_t line_no) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc{} || ptr != cell.data() + cell.size())
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(line_no) + ": bad number '" +
                    std::string(cell) + "'",
                "line " + std::to_string(line_no));
  return v;
}

// Parsed numeric table with a header check.
std::vector<std::vector<double>> read_table(std::string_view text,
                                            std::string_view header) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines.front() != header)
    throw Error(ErrorCode::kParseError,
                "CSV header does not match the expected schema", "line 1");
  const std::size_t width = split(header, ',').size();
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split(lines[i], ',');
    if (cells.size() != width)
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(i + 1) + ": expected " +
                      std::to_string(width) + " columns",
                  "line " + std::to_string(i + 1));
    std::vector<double> row;
    row.reserve(width);
    for (auto c : cells) row.push_back(to_double(c, i + 1));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string write_trace_csv(const PowerTrace& trace) {
  std::string out(kTraceCsvHeader);
  out += '\n';
  for (const auto& s : trace) {
    const auto& st = s.state;
    const auto& p = s.power;
    const double cells[] = {st.t_s,       st.s_m,        rad_to_deg(st.incline_rad),
                            st.twist.vx,  st.twist.vy,   st.twist.wz,
                            st.temp_C,    p.copper_W,    p.iron_W,
                            p.mechanical_W, p.friction_W, p.motion_W,
                            p.control_W,  p.sensing_W,   p.total_W,
                            s.e_cum_J};
    for (std::size_t i = 0; i < std::size(cells); ++i) {
      if (i) out += ',';
      append_g9(out, cells[i]);
    }
    out += '\n';
  }
  return out;
}

std::string write_states_csv(const PowerTrace& trace) {
  std::string out(kStatesCsvHeader);
  out += '\n';
  for (const auto& s : trace) {
    const auto& st = s.state;
    std::vector<double> cells = {st.t_s,
                                 st.t_model_s,
                                 st.s_m,
                                 rad_to_deg(st.incline_rad),
                                 rad_to_deg(st.heading_rad),
                                 st.friction_scale,
                                 st.speed_m_s,
                                 st.accel_m_s2,
                                 st.f_up_N};
    for (const auto* v : {&st.wheel_speed_m_s, &st.wheel_accel_m_s2,
                          &st.omega_rad_s, &st.traction_N, &st.loads.n_N})
      for (Eigen::Index i = 0; i < 4; ++i) cells.push_back((*v)(i));
    cells.push_back(st.temp_C);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      append_exact(out, cells[i]);
    }
    out += '\n';
  }
  return out;
}

std::vector<MeasuredSample> read_trace_csv(std::string_view text) {
  std::vector<MeasuredSample> out;
  for (const auto& row : read_table(text, kTraceCsvHeader))
    out.push_back({row[0], row[11]});
  return out;
}

std::vector<MotionState> read_states_csv(std::string_view text) {
  std::vector<MotionState> out;
  for (const auto& row : read_table(text, kStatesCsvHeader)) {
    MotionState st;
    st.t_s = row[0];
    st.t_model_s = row[1];
    st.s_m = row[2];
    st.incline_rad = deg_to_rad(row[3]);
    st.heading_rad = deg_to_rad(row[4]);
    st.friction_scale = row[5];
    st.speed_m_s = row[6];
    st.accel_m_s2 = row[7];
    st.f_up_N = row[8];
    std::size_t c = 9;
    for (auto* v : {&st.wheel_speed_m_s, &st.wheel_accel_m_s2, &st.omega_rad_s,
                    &st.traction_N, &st.loads.n_N})
      for (Eigen::Index i = 0; i < 4; ++i) (*v)(i) = row[c++];
    st.loads.total_N = st.loads.n_N.sum();
    st.temp_C = row[c];
    st.twist = {st.speed_m_s * std::cos(st.heading_rad),
                st.speed_m_s * std::sin(st.heading_rad), 0.0};
    out.push_back(st);
  }
  return out;
}

std::string write_report(const EnergyReport& r) {
  std::string out;
  auto line = [&](const std::string& key, double v) {
    out += key + " = ";
    append_g9(out, v);
    out += '\n';
  };
  line("report.total_J", r.total_J);
  line("report.copper_J", r.per_channel_J.copper_J);
  line("report.iron_J", r.per_channel_J.iron_J);
  line("report.mechanical_J", r.per_channel_J.mechanical_J);
  line("report.friction_J", r.per_channel_J.friction_J);
  line("report.control_J", r.per_channel_J.control_J);
  line("report.sensing_J", r.per_channel_J.sensing_J);
  for (std::size_t i = 0; i < r.per_segment_J.size(); ++i)
    line("report.segment." + std::to_string(i) + "_J", r.per_segment_J[i]);
  line("report.peak_W", r.peak_W);
  line("report.duration_s", r.duration_s);
  return out;
}

std::string write_gnuplot_script(std::string_view csv_path) {
  std::string p(csv_path);
  return "set datafile separator ','\n"
         "set key autotitle columnhead\n"
         "set xlabel 't [s]'\n"
         "set ylabel 'power [W]'\n"
         "set grid\n"
         "plot '" + p + "' using 1:8 with lines, \\\n"
         "     '" + p + "' using 1:9 with lines, \\\n"
         "     '" + p + "' using 1:10 with lines, \\\n"
         "     '" + p + "' using 1:11 with lines, \\\n"
         "     '" + p + "' using 1:12 with lines, \\\n"
         "     '" + p + "' using 1:15 with lines\n"
         "pause -1\n";
}

}  // namespace mecanum_energy
