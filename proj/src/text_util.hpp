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

// Tokenizer shared by the schedule and circuit readers.

#include <string>
#include <vector>

namespace alternator::text_util {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<std::string> split_lines(const std::string& text);

/// Splits on whitespace and drops everything from the first '#'.
std::vector<Token> tokenize(const std::string& line);

/// Full-precision decimal parse; throws ParseError on anything else.
double parse_real(const Token& token, int line);
long long parse_integer(const Token& token, int line);

}  // namespace alternator::text_util
