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

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>

#include "gnss/degree.hpp"

namespace gnss {

/// Truth, indeterminacy and falsity degrees of one object under one parameter.
struct Triple {
  Degree truth;
  Degree indeterminacy;
  Degree falsity;

  friend constexpr bool operator==(const Triple&, const Triple&) noexcept = default;
};

/// Which extra condition a triple must meet on top of the [0, 1] ranges.
enum class ConstraintMode {
  GnsMin,            // min(t, i, f) <= 0.5
  GnsSumLiteral,     // t + i + f <= 0.5
  NeutrosophicOnly,  // t + i + f <= 3 only
};

std::string_view to_string(ConstraintMode mode) noexcept;

/// Accepts the CLI spellings "min", "sum-literal" and "none".
std::optional<ConstraintMode> parse_constraint_mode(std::string_view text) noexcept;

constexpr bool satisfies(const Triple& x, ConstraintMode mode) noexcept {
  const int t = x.truth.units();
  const int i = x.indeterminacy.units();
  const int f = x.falsity.units();
  if (t + i + f > 3 * Degree::kScale) return false;
  switch (mode) {
    case ConstraintMode::GnsMin:
      return std::min({t, i, f}) <= Degree::kScale / 2;
    case ConstraintMode::GnsSumLiteral:
      return t + i + f <= Degree::kScale / 2;
    case ConstraintMode::NeutrosophicOnly:
      return true;
  }
  return false;
}

/// Throws Error(ConstraintViolation) naming the mode and the values when the
/// triple does not satisfy `mode`.
Triple make_triple(Degree truth, Degree indeterminacy, Degree falsity,
                   ConstraintMode mode = ConstraintMode::GnsMin);

/// Swaps truth and falsity.
constexpr Triple complement(const Triple& x) noexcept {
  return {x.falsity, x.indeterminacy, x.truth};
}

/// (max t, min i, min f). Used for soft-set union and for OR.
constexpr Triple unite(const Triple& a, const Triple& b) noexcept {
  return {std::max(a.truth, b.truth), std::min(a.indeterminacy, b.indeterminacy),
          std::min(a.falsity, b.falsity)};
}

/// (min t, min i, max f). Used for soft-set intersection and for AND.
constexpr Triple intersect(const Triple& a, const Triple& b) noexcept {
  return {std::min(a.truth, b.truth), std::min(a.indeterminacy, b.indeterminacy),
          std::max(a.falsity, b.falsity)};
}

// Falsity is ordered like indeterminacy: the smaller triple carries at least
// as much falsity as the larger one.
constexpr bool is_contained_in(const Triple& a, const Triple& b) noexcept {
  return a.truth <= b.truth && a.indeterminacy >= b.indeterminacy &&
         a.falsity >= b.falsity;
}

/// "(0.5, 0.6, 0.3)"
std::string to_string(const Triple& x);

}  // namespace gnss
