// Copyright 2026 The nlgames authors
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

namespace nlgames {

// Failure modes surfaced to callers. The CLI maps NotPerfect and
// NondeterministicAnswer to exit code 1 (a verification that ran and failed)
// and every other code to exit code 2 (malformed input or a violated
// precondition).
enum class ErrorCode {
  NotUnitVector,
  DimensionMismatch,
  NotPSD,
  OddN,
  BadN,
  BudgetExceeded,
  ShapeMismatch,
  InvalidMeasurement,
  NotFullSchmidtRank,
  HypothesisViolated,
  NotAFunction,
  NotWeaklyProjective,
  NotPerfect,
  InvalidWeight,
  UnsupportedGameShape,
  EmptyConstraintSystem,
  NondeterministicAnswer,
  ImproperColoring,
  MalformedInput,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotUnitVector: return "NotUnitVector";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::OddN: return "OddN";
    case ErrorCode::BadN: return "BadN";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidMeasurement: return "InvalidMeasurement";
    case ErrorCode::NotFullSchmidtRank: return "NotFullSchmidtRank";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NotAFunction: return "NotAFunction";
    case ErrorCode::NotWeaklyProjective: return "NotWeaklyProjective";
    case ErrorCode::NotPerfect: return "NotPerfect";
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::UnsupportedGameShape: return "UnsupportedGameShape";
    case ErrorCode::EmptyConstraintSystem: return "EmptyConstraintSystem";
    case ErrorCode::NondeterministicAnswer: return "NondeterministicAnswer";
    case ErrorCode::ImproperColoring: return "ImproperColoring";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nlgames
