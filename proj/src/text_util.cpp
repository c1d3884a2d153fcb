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

#include "text_util.hpp"

#include <charconv>

#include "alternator/error.hpp"

namespace alternator::text_util {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(current);
      current.clear();
    } else if (ch != '\r') {
      current += ch;
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char ch = line[i];
    if (ch == '#') break;
    if (ch == ' ' || ch == '\t') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '#') {
      ++i;
    }
    tokens.push_back({line.substr(start, i - start),
                      static_cast<int>(start) + 1});
  }
  return tokens;
}

double parse_real(const Token& token, int line) {
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  if (first != last && *first == '+') ++first;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, token.column,
                     "malformed number '" + token.text + "'");
  }
  return value;
}

long long parse_integer(const Token& token, int line) {
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  long long value = 0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, token.column,
                     "malformed integer '" + token.text + "'");
  }
  return value;
}

}  // namespace alternator::text_util
