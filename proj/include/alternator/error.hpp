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

#pragma once

#include <stdexcept>
#include <string>

namespace alternator {

enum class ErrorCode {
  kInput,
  kSizeCap,
  kParse,
  kNoSolutionInRange,
  kSolverFailure,
  kBudgetTooTight,
};

const char* to_string(ErrorCode code);

/// Every failure in the library is reported as an `Error` carrying a code the
/// CLI maps onto its exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the circuit and schedule readers. `line` is 1-based; `column` is
/// the 1-based position of the offending token, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Raised by the compiler when a layer cannot be lowered; `layer_index` is the
/// zero-based position of the failing element in the circuit.
class LayerError : public Error {
 public:
  LayerError(ErrorCode code, int layer_index, const std::string& message);

  int layer_index() const { return layer_index_; }

 private:
  int layer_index_;
};

}  // namespace alternator
