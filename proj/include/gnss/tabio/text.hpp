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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gnss/triple.hpp"

namespace gnss {

/// "(t, i, f)" with optional spaces. Throws MalformedCell or DegreeOutOfRange
/// (without a location; callers attach one).
Triple parse_triple(std::string_view text);

struct TextLine {
  std::size_t number = 0;  // 1-based physical line
  std::string_view text;
};

/// Non-blank lines of `text`, with "\r\n" endings accepted.
std::vector<TextLine> split_lines(std::string_view text);

/// Splits one CSV record. Double-quoted fields follow RFC 4180 quoting;
/// unquoted fields may also carry commas inside parentheses, so a bare
/// `(0.5, 0.6, 0.3)` is one field. Fields are trimmed.
/// Throws MalformedCell for an unterminated quote.
std::vector<std::string> split_csv_record(std::string_view line);

/// Wraps a field in double quotes when it contains a comma or a quote.
std::string quote_csv_field(std::string_view field);

std::string_view trim(std::string_view s) noexcept;

}  // namespace gnss
