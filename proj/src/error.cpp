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

#include "mecanum_energy/error.hpp"

#include <utility>

namespace mecanum_energy {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPositiveMass: return "NonPositiveMass";
    case ErrorCode::kRadiusTooLarge: return "RadiusTooLarge";
    case ErrorCode::kCoefficientOutOfRange: return "CoefficientOutOfRange";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kMissingField: return "MissingField";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kInvalidIncline: return "InvalidIncline";
    case ErrorCode::kCogOutsideFootprint: return "CogOutsideFootprint";
    case ErrorCode::kNonPositiveDt: return "NonPositiveDt";
    case ErrorCode::kEmptyScenario: return "EmptyScenario";
    case ErrorCode::kZeroVelocity: return "ZeroVelocity";
    case ErrorCode::kTooFewSamples: return "TooFewSamples";
    case ErrorCode::kNonMonotonicTime: return "NonMonotonicTime";
    case ErrorCode::kNegativeTime: return "NegativeTime";
    case ErrorCode::kNegativeChannel: return "NegativeChannel";
    case ErrorCode::kMisalignedTimestamps: return "MisalignedTimestamps";
    case ErrorCode::kRankDeficient: return "RankDeficient";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kZeroMeasurement: return "ZeroMeasurement";
    case ErrorCode::kInvalidBracket: return "InvalidBracket";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::string field)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      field_(std::move(field)) {}

namespace {

std::string join_violations(const std::vector<Violation>& violations) {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.field + " (" + std::string(to_string(v.code)) + "): " + v.message;
  }
  return out;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(violations.empty() ? ErrorCode::kInvariantViolation
                               : violations.front().code,
            join_violations(violations),
            violations.empty() ? std::string{} : violations.front().field),
      violations_(std::move(violations)) {}

RankDeficientError::RankDeficientError(std::vector<std::string> columns,
                                       int rank)
    : Error(ErrorCode::kRankDeficient,
            "regressor matrix has rank " + std::to_string(rank) +
                "; unidentifiable columns: " + join_names(columns)),
      columns_(std::move(columns)),
      rank_(rank) {}

}  // namespace mecanum_energy
