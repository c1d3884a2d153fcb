// Copyright 2026 The Alternator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "alternator/error.hpp"

namespace alternator {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInput:
      return "INPUT_ERROR";
    case ErrorCode::kSizeCap:
      return "SIZE_CAP_EXCEEDED";
    case ErrorCode::kParse:
      return "PARSE_ERROR";
    case ErrorCode::kNoSolutionInRange:
      return "NO_SOLUTION_IN_RANGE";
    case ErrorCode::kSolverFailure:
      return "SOLVER_FAILURE";
    case ErrorCode::kBudgetTooTight:
      return "BUDGET_TOO_TIGHT";
  }
  return "UNKNOWN";
}

ParseError::ParseError(int line, int column, const std::string& message)
    : Error(ErrorCode::kParse,
            "line " + std::to_string(line) +
                (column > 0 ? ", column " + std::to_string(column) : "") +
                ": " + message),
      line_(line),
      column_(column) {}

LayerError::LayerError(ErrorCode code, int layer_index,
                       const std::string& message)
    : Error(code, "layer " + std::to_string(layer_index) + ": " + message),
      layer_index_(layer_index) {}

}  // namespace alternator
