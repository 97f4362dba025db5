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

#include "gnss/triple.hpp"

#include "gnss/error.hpp"

namespace gnss {

std::string_view to_string(ConstraintMode mode) noexcept {
  switch (mode) {
    case ConstraintMode::GnsMin: return "min";
    case ConstraintMode::GnsSumLiteral: return "sum-literal";
    case ConstraintMode::NeutrosophicOnly: return "none";
  }
  return "?";
}

std::optional<ConstraintMode> parse_constraint_mode(std::string_view text) noexcept {
  if (text == "min") return ConstraintMode::GnsMin;
  if (text == "sum-literal") return ConstraintMode::GnsSumLiteral;
  if (text == "none") return ConstraintMode::NeutrosophicOnly;
  return std::nullopt;
}

Triple make_triple(Degree truth, Degree indeterminacy, Degree falsity, ConstraintMode mode) {
  const Triple x{truth, indeterminacy, falsity};
  if (!satisfies(x, mode)) {
    throw Error(ErrorKind::ConstraintViolation,
                to_string(x) + " violates the '" + std::string(to_string(mode)) + "' constraint");
  }
  return x;
}

std::string to_string(const Triple& x) {
  return "(" + x.truth.to_string() + ", " + x.indeterminacy.to_string() + ", " +
         x.falsity.to_string() + ")";
}

}  // namespace gnss
