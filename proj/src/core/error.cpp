// Copyright 2026 The linhyper Authors
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

#include "error.hpp"

namespace linhyper {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNegativeDegree: return "NegativeDegree";
    case ErrorCode::kInvalidR: return "InvalidR";
    case ErrorCode::kNotDivisible: return "NotDivisible";
    case ErrorCode::kDegenerateM: return "DegenerateM";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kWrongRightDegree: return "WrongRightDegree";
    case ErrorCode::kLoopPresent: return "LoopPresent";
    case ErrorCode::kNonConforming: return "NonConforming";
    case ErrorCode::kNotASwitching: return "NotASwitching";
    case ErrorCode::kNoFourCycle: return "NoFourCycle";
    case ErrorCode::kRetryLimitExceeded: return "RetryLimitExceeded";
    case ErrorCode::kStepLimit: return "StepLimit";
    case ErrorCode::kPreconditionFailed: return "PreconditionFailed";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace linhyper
