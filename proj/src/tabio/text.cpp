//  Copyright 2026 The gnss Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "gnss/tabio/text.hpp"

#include "gnss/error.hpp"

namespace gnss {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

}  // namespace

std::string_view trim(std::string_view s) noexcept {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

Triple parse_triple(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw Error(ErrorKind::MalformedCell,
                "expected a triple '(t, i, f)', got '" + std::string(s) + "'");
  }
  const std::string_view inner = s.substr(1, s.size() - 2);
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= inner.size(); ++k) {
    if (k == inner.size() || inner[k] == ',') {
      parts.push_back(trim(inner.substr(start, k - start)));
      start = k + 1;
    }
  }
  if (parts.size() != 3) {
    throw Error(ErrorKind::MalformedCell, "triple '" + std::string(s) + "' has " +
                                              std::to_string(parts.size()) + " components");
  }
  return {Degree::parse(parts[0]), Degree::parse(parts[1]), Degree::parse(parts[2])};
}

std::vector<TextLine> split_lines(std::string_view text) {
  std::vector<TextLine> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!trim(line).empty()) lines.push_back({number, line});
    start = end + 1;
  }
  return lines;
}

std::vector<std::string> split_csv_record(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t k = 0;
  while (true) {
    while (k < line.size() && is_space(line[k])) ++k;
    std::string field;
    if (k < line.size() && line[k] == '"') {
      ++k;
      bool closed = false;
      while (k < line.size()) {
        if (line[k] == '"') {
          if (k + 1 < line.size() && line[k + 1] == '"') {
            field += '"';
            k += 2;
            continue;
          }
          closed = true;
          ++k;
          break;
        }
        field += line[k++];
      }
      if (!closed) {
        throw Error(ErrorKind::MalformedCell, "unterminated quoted field",
                    Location{0, fields.size() + 1});
      }
      while (k < line.size() && is_space(line[k])) ++k;
      if (k < line.size() && line[k] != ',') {
        throw Error(ErrorKind::MalformedCell, "unexpected text after a quoted field",
                    Location{0, fields.size() + 1});
      }
    } else {
      int depth = 0;
      const std::size_t start = k;
      while (k < line.size() && !(line[k] == ',' && depth == 0)) {
        if (line[k] == '(') ++depth;
        if (line[k] == ')' && depth > 0) --depth;
        ++k;
      }
      field = std::string(trim(line.substr(start, k - start)));
    }
    fields.push_back(std::move(field));
    if (k >= line.size()) break;
    ++k;  // the comma
  }
  return fields;
}

std::string quote_csv_field(std::string_view field) {
  if (field.find_first_of(",\"") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace gnss
