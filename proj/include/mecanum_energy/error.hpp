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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mecanum_energy {

enum class ErrorCode {
  kNonPositiveMass,
  kRadiusTooLarge,
  kCoefficientOutOfRange,
  kParseError,
  kMissingField,
  kInvariantViolation,
  kInvalidIncline,
  kCogOutsideFootprint,
  kNonPositiveDt,
  kEmptyScenario,
  kZeroVelocity,
  kTooFewSamples,
  kNonMonotonicTime,
  kNegativeTime,
  kNegativeChannel,
  kMisalignedTimestamps,
  kRankDeficient,
  kLengthMismatch,
  kZeroMeasurement,
  kInvalidBracket,
  kIoError,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every failure raised by the library. `field()` names the
/// offending configuration key or quantity when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string field = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& field() const noexcept { return field_; }

 private:
  ErrorCode code_;
  std::string field_;
};

struct Violation {
  ErrorCode code;
  std::string field;
  std::string message;

  bool operator==(const Violation&) const = default;
};

/// Raised by parameter validation; carries every violated invariant, one per
/// offending field.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const noexcept {
    return violations_;
  }

 private:
  std::vector<Violation> violations_;
};

class RankDeficientError : public Error {
 public:
  RankDeficientError(std::vector<std::string> columns, int rank);

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  int rank() const noexcept { return rank_; }

 private:
  std::vector<std::string> columns_;
  int rank_;
};

}  // namespace mecanum_energy
