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

#include <string>
#include <string_view>
#include <vector>

#include "gnss/decision.hpp"
#include "gnss/soft_set.hpp"

namespace gnss {

// Soft-set CSV layout:
//
//   U,bright,not cheap,bright|costly
//   b1,"(0.5, 0.6, 0.3)","(0.6, 0.3, 0.5)","(0.6, 0.2, 0.5)"
//
// The header starts with `U`, followed by parameter keys (see
// ParamKey::parse). Each following line is an object id and one triple per
// parameter. Errors carry the 1-based (row, column) of the offending field.

struct CellNote {
  std::string object;
  std::string param;
  std::string text;
};

/// A parsed table together with where it came from and remarks about cells.
struct TableDocument {
  std::string source;
  SoftSet set;
  std::vector<CellNote> notes;
};

SoftSet parse_csv(std::string_view text, ConstraintMode mode = ConstraintMode::GnsMin);
TableDocument parse_csv_document(std::string_view text, std::string source,
                                 ConstraintMode mode = ConstraintMode::GnsMin);

/// Canonical form: shortest exact decimals, "(t, i, f)" quoted, rows in
/// universe order, columns in parameter order, "\n" line ends.
std::string serialize_csv(const SoftSet& s);

// Integer tables share the layout with integer cells; a score table has the
// single column `Score`.
ComparisonMatrix parse_matrix_csv(std::string_view text);
std::string serialize_matrix_csv(const ComparisonMatrix& m);
ScoreVector parse_scores_csv(std::string_view text);
std::string serialize_scores_csv(const ScoreVector& s);

}  // namespace gnss
