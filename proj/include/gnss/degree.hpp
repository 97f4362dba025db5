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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace gnss {

/// A membership degree in [0, 1], stored exactly as a count of 1/10000ths.
///
/// Every comparison, min and max in the library goes through the integer
/// representation, so ties between degrees written as decimals are exact.
class Degree {
 public:
  using Rep = std::uint16_t;
  static constexpr Rep kScale = 10000;
  static constexpr int kFractionDigits = 4;

  constexpr Degree() noexcept = default;

  static constexpr Degree zero() noexcept { return Degree(0); }
  static constexpr Degree one() noexcept { return Degree(kScale); }
  static constexpr Degree half() noexcept { return Degree(kScale / 2); }

  /// Throws Error(DegreeOutOfRange) unless 0 <= units <= 10000.
  static Degree from_units(long long units);

  /// Parses `d+` or `d+.d{1,4}`. Malformed text throws MalformedCell, a
  /// well-formed number outside [0, 1] throws DegreeOutOfRange.
  static Degree parse(std::string_view text);

  constexpr Rep units() const noexcept { return units_; }

  /// Shortest exact decimal: "0", "1", "0.5", "0.0001".
  std::string to_string() const;

  friend constexpr auto operator<=>(Degree, Degree) noexcept = default;

 private:
  friend struct DegreeLiteral;
  constexpr explicit Degree(Rep units) noexcept : units_(units) {}

  Rep units_ = 0;
};

struct DegreeLiteral {
  static consteval Degree make(const char* text) {
    long long integral = 0;
    int i = 0;
    for (; text[i] >= '0' && text[i] <= '9'; ++i) integral = integral * 10 + (text[i] - '0');
    long long fraction = 0;
    int digits = 0;
    if (text[i] == '.') {
      for (++i; text[i] >= '0' && text[i] <= '9'; ++i, ++digits) {
        fraction = fraction * 10 + (text[i] - '0');
      }
    }
    if (text[i] != '\0' || digits > Degree::kFractionDigits) throw "degree literal";
    for (; digits < Degree::kFractionDigits; ++digits) fraction *= 10;
    const long long units = integral * Degree::kScale + fraction;
    if (units > Degree::kScale) throw "degree literal out of range";
    return Degree(static_cast<Degree::Rep>(units));
  }
};

namespace literals {

/// `0.35_dg` is the exact degree 3500/10000, checked at compile time.
consteval Degree operator""_dg(const char* text) { return DegreeLiteral::make(text); }

}  // namespace literals

}  // namespace gnss
