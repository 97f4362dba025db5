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

#include "gnss/degree.hpp"

#include "gnss/error.hpp"

namespace gnss {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

Degree Degree::from_units(long long units) {
  if (units < 0 || units > kScale) {
    throw Error(ErrorKind::DegreeOutOfRange,
                "degree " + std::to_string(units) + "/10000 is outside [0, 1]");
  }
  return Degree(static_cast<Rep>(units));
}

Degree Degree::parse(std::string_view text) {
  const std::string quoted = "'" + std::string(text) + "'";
  bool negative = false;
  std::string_view rest = text;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }

  std::size_t pos = 0;
  long long integral = 0;
  while (pos < rest.size() && is_digit(rest[pos])) {
    // Anything past a few digits is already out of range; stop accumulating.
    if (integral < kScale) integral = integral * 10 + (rest[pos] - '0');
    ++pos;
  }
  if (pos == 0) throw Error(ErrorKind::MalformedCell, "expected a decimal degree, got " + quoted);

  long long fraction = 0;
  int digits = 0;
  if (pos < rest.size() && rest[pos] == '.') {
    ++pos;
    while (pos < rest.size() && is_digit(rest[pos])) {
      if (++digits > kFractionDigits) {
        throw Error(ErrorKind::MalformedCell,
                    "degree " + quoted + " has more than 4 fractional digits");
      }
      fraction = fraction * 10 + (rest[pos] - '0');
      ++pos;
    }
    if (digits == 0) {
      throw Error(ErrorKind::MalformedCell, "expected digits after '.' in " + quoted);
    }
  }
  if (pos != rest.size()) {
    throw Error(ErrorKind::MalformedCell, "expected a decimal degree, got " + quoted);
  }
  for (; digits < kFractionDigits; ++digits) fraction *= 10;

  const long long units = integral * kScale + fraction;
  if ((negative && units != 0) || units > kScale) {
    throw Error(ErrorKind::DegreeOutOfRange, "degree " + quoted + " is outside [0, 1]");
  }
  return Degree(static_cast<Rep>(units));
}

std::string Degree::to_string() const {
  std::string text = std::to_string(units_ / kScale);
  unsigned fraction = units_ % kScale;
  if (fraction == 0) return text;
  std::string digits(kFractionDigits, '0');
  for (int i = kFractionDigits - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = static_cast<char>('0' + fraction % 10);
    fraction /= 10;
  }
  while (digits.back() == '0') digits.pop_back();
  return text + "." + digits;
}

}  // namespace gnss
