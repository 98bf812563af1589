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

#include "mecanum_energy/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>

#include "mecanum_energy/calibration.hpp"
#include "mecanum_energy/config_io.hpp"
#include "mecanum_energy/optimizer.hpp"
#include "mecanum_energy/simulator.hpp"
#include "mecanum_energy/trace_io.hpp"

namespace mecanum_energy {

ExitStatus exit_status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPositiveMass:
    case ErrorCode::kRadiusTooLarge:
    case ErrorCode::kCoefficientOutOfRange:
    case ErrorCode::kParseError:
    case ErrorCode::kMissingField:
    case ErrorCode::kInvariantViolation:
    case ErrorCode::kInvalidIncline:
    case ErrorCode::kCogOutsideFootprint:
    case ErrorCode::kNonPositiveDt:
    case ErrorCode::kEmptyScenario:
      return ExitStatus::kValidation;
    case ErrorCode::kIoError:
      return ExitStatus::kIo;
    case ErrorCode::kZeroVelocity:
    case ErrorCode::kTooFewSamples:
    case ErrorCode::kNonMonotonicTime:
    case ErrorCode::kNegativeTime:
    case ErrorCode::kNegativeChannel:
    case ErrorCode::kMisalignedTimestamps:
    case ErrorCode::kRankDeficient:
    case ErrorCode::kLengthMismatch:
    case ErrorCode::kZeroMeasurement:
    case ErrorCode::kInvalidBracket:
      return ExitStatus::kNumerical;
  }
  return ExitStatus::kNumerical;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::kIoError, "cannot read '" + path + "'", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad())
    throw Error(ErrorCode::kIoError, "error reading '" + path + "'", path);
  return buf.str();
}

// Files produced by one command, committed together at the end.
class OutputSet {
 public:
  void add(std::string path, std::string content) {
    files_.emplace_back(std::move(path), std::move(content));
  }

  void commit() const {
    std::vector<std::string> staged;
    auto discard = [&] {
      for (const auto& tmp : staged) std::remove(tmp.c_str());
    };
    for (const auto& [path, content] : files_) {
      const std::string tmp = path + ".tmp";
      std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
      if (f) staged.push_back(tmp);
      if (!(f << content) || !(f.flush())) {
        discard();
        throw Error(ErrorCode::kIoError, "cannot write '" + path + "'", path);
      }
    }
    for (std::size_t i = 0; i < files_.size(); ++i) {
      std::error_code ec;
      std::filesystem::rename(staged[i], files_[i].first, ec);
      if (ec) {
        discard();
        throw Error(ErrorCode::kIoError,
                    "cannot write '" + files_[i].first + "': " + ec.message(),
                    files_[i].first);
      }
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> files_;
};

ValidatedParams load_validated(const std::string& path) {
  return validate_params(load_params(read_file(path)));
}

struct SimulateArgs {
  std::string scenario, params, out, report, states, gnuplot;
};

void run_simulate(const SimulateArgs& a) {
  const auto params = load_validated(a.params);
  const auto scenario = load_scenario(read_file(a.scenario));
  const auto result = simulate(scenario, params);
  OutputSet files;
  files.add(a.out, write_trace_csv(result.trace));
  if (!a.report.empty()) files.add(a.report, write_report(result.report));
  if (!a.states.empty()) files.add(a.states, write_states_csv(result.trace));
  if (!a.gnuplot.empty()) files.add(a.gnuplot, write_gnuplot_script(a.out));
  files.commit();
}

struct FitArgs {
  std::vector<std::string> traces, states;
  std::string out;
  bool noise_report = false;
  double reference_temp_C = 25.0;
};

void run_fit(const FitArgs& a, std::ostream& out) {
  if (a.traces.size() != a.states.size())
    throw Error(ErrorCode::kLengthMismatch,
                "every --trace needs a matching --states file");
  std::vector<CalibrationData> data;
  for (std::size_t i = 0; i < a.traces.size(); ++i)
    data.push_back({read_trace_csv(read_file(a.traces[i])),
                    read_states_csv(read_file(a.states[i]))});
  FitOptions options;
  options.reference_temp_C = a.reference_temp_C;
  const auto fit = fit_coefficients(data, options);
  OutputSet files;
  files.add(a.out, serialize_fit(fit));
  files.commit();

  if (a.noise_report) {
    double max_abs = 0.0;
    double sum = 0.0;
    for (std::size_t k = 0; k < fit.measured_W.size(); ++k) {
      const double r = fit.measured_W[k] - fit.predicted_W[k];
      max_abs = std::max(max_abs, std::abs(r));
      sum += r;
    }
    out << "noise.samples = " << fit.samples << '\n'
        << "noise.mean_residual_W = "
        << format_exact(sum / static_cast<double>(fit.samples)) << '\n'
        << "noise.rms_residual_W = " << format_exact(fit.residual_rms_W) << '\n'
        << "noise.max_abs_residual_W = " << format_exact(max_abs) << '\n'
        << "noise.accuracy_pct = " << format_exact(fit.accuracy_pct) << '\n';
  }
}

struct OptimizeArgs {
  std::string scenario, params, out;
  double v_min = 0.0, v_max = 0.0, tol = 1e-3;
  bool per_segment = false;
  std::size_t jobs = 1;
};

void run_optimize(const OptimizeArgs& a, std::ostream& out) {
  const auto params = load_validated(a.params);
  const auto scenario = load_scenario(read_file(a.scenario));
  std::string text;
  auto line = [&](const std::string& key, const std::string& value) {
    text += key + " = " + value + "\n";
  };
  if (a.per_segment) {
    const auto plan =
        per_segment_speeds(scenario, params, a.v_min, a.v_max, a.tol, a.jobs);
    line("optimize.single.v_m_s", format_exact(plan.single_speed.v_m_s));
    line("optimize.single.energy_J", format_exact(plan.single_speed.energy_J));
    for (std::size_t j = 0; j < plan.v_m_s.size(); ++j) {
      const std::string key = "optimize.segment." + std::to_string(j);
      line(key + ".v_m_s", format_exact(plan.v_m_s[j]));
      line(key + ".energy_J", format_exact(plan.segments[j].energy_J));
    }
    line("optimize.plan.predicted_energy_J", format_exact(plan.predicted_energy_J));
    line("optimize.plan.total_energy_J", format_exact(plan.total_energy_J));
    line("optimize.plan.coupling_error", format_exact(plan.coupling_error));
    line("optimize.iterations", std::to_string(plan.iterations));
  } else {
    const auto best = min_energy_speed(scenario, params, a.v_min, a.v_max, a.tol);
    line("optimize.v_m_s", format_exact(best.v_m_s));
    line("optimize.energy_J", format_exact(best.energy_J));
    line("optimize.iterations", std::to_string(best.iterations));
    const auto& last = best.bracket_history.back();
    line("optimize.bracket_lo_m_s", format_exact(last.lo_m_s));
    line("optimize.bracket_hi_m_s", format_exact(last.hi_m_s));
  }
  if (a.out.empty()) {
    out << text;
  } else {
    OutputSet files;
    files.add(a.out, text);
    files.commit();
  }
}

void run_validate(const std::string& params_path, const std::string& scenario_path,
                  std::ostream& out) {
  const auto params = load_validated(params_path);
  if (!scenario_path.empty()) {
    const auto scenario = load_scenario(read_file(scenario_path));
    check_cog(scenario.cog, params->robot);
  }
  out << "ok\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Energy model toolkit for four-wheel Mecanum robots",
               "mecanum-energy"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Simulate a scenario");
  simulate_cmd->add_option("--scenario", sim.scenario, "Scenario file")->required();
  simulate_cmd->add_option("--params", sim.params, "Parameter file")->required();
  simulate_cmd->add_option("--out", sim.out, "Power trace CSV")->required();
  simulate_cmd->add_option("--report", sim.report, "Energy report");
  simulate_cmd->add_option("--states", sim.states, "Motion states CSV for fit");
  simulate_cmd->add_option("--gnuplot-script", sim.gnuplot,
                           "gnuplot script plotting the trace");

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "Fit motion-power coefficients");
  fit_cmd->add_option("--trace", fit.traces, "Measured trace CSV (repeatable)")
      ->required();
  fit_cmd->add_option("--states", fit.states, "Motion states CSV (repeatable)")
      ->required();
  fit_cmd->add_option("--out", fit.out, "Coefficient file")->required();
  fit_cmd->add_flag("--noise-report", fit.noise_report,
                    "Print residual statistics");
  fit_cmd->add_option("--reference-temp", fit.reference_temp_C,
                      "Reference temperature of the thermal slopes [C]");

  OptimizeArgs opt;
  auto* optimize_cmd =
      app.add_subcommand("optimize", "Find minimum-energy cruise speeds");
  optimize_cmd->add_option("--scenario", opt.scenario, "Scenario file")->required();
  optimize_cmd->add_option("--params", opt.params, "Parameter file")->required();
  optimize_cmd->add_option("--v-min", opt.v_min, "Lower speed bound [m/s]")
      ->required();
  optimize_cmd->add_option("--v-max", opt.v_max, "Upper speed bound [m/s]")
      ->required();
  optimize_cmd->add_option("--tol", opt.tol, "Final bracket width [m/s]");
  optimize_cmd->add_flag("--per-segment", opt.per_segment,
                         "Optimize every segment independently");
  optimize_cmd->add_option("--jobs", opt.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  optimize_cmd->add_option("--out", opt.out, "Result file (default stdout)");

  std::string validate_params_path;
  std::string validate_scenario_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check a parameter file");
  validate_cmd->add_option("--params", validate_params_path, "Parameter file")
      ->required();
  validate_cmd->add_option("--scenario", validate_scenario_path,
                           "Also check a scenario against the robot");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return static_cast<int>(ExitStatus::kValidation);
  }

  try {
    if (simulate_cmd->parsed()) run_simulate(sim);
    if (fit_cmd->parsed()) run_fit(fit, out);
    if (optimize_cmd->parsed()) run_optimize(opt, out);
    if (validate_cmd->parsed())
      run_validate(validate_params_path, validate_scenario_path, out);
  } catch (const ValidationError& e) {
    for (const auto& v : e.violations())
      err << "error: " << to_string(v.code) << ": " << v.field << ": "
          << v.message << '\n';
    return static_cast<int>(exit_status_for(e.code()));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(exit_status_for(e.code()));
  }
  return 0;
}

}  // namespace mecanum_energy
