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
#include <vector>

#include "gnss/decision.hpp"
#include "gnss/soft_set.hpp"

namespace gnss {

template <typename Cell>
struct CellDiff {
  std::string object;
  std::string param;  // spelled as in the expected table
  Cell expected;
  Cell actual;
};

template <typename Cell>
struct DiffReport {
  std::vector<CellDiff<Cell>> cells;  // parameter-major, then universe order
  std::size_t compared = 0;

  bool empty() const noexcept { return cells.empty(); }
  std::size_t size() const noexcept { return cells.size(); }
};

// Exact cell-by-cell comparison. Parameters are matched by key, so the two
// tables may list them in different orders. Throws Error(ShapeMismatch) when
// the universes or the parameter sets differ.
DiffReport<Triple> diff_tables(const SoftSet& expected, const SoftSet& actual);
DiffReport<int> diff_tables(const ComparisonMatrix& expected, const ComparisonMatrix& actual);

/// "(b5,Cheap),(b1,costly)"
template <typename Cell>
std::string locations(const DiffReport<Cell>& report) {
  std::string out;
  for (const auto& d : report.cells) {
    if (!out.empty()) out += ",";
    out += "(" + d.object + "," + d.param + ")";
  }
  return out;
}

}  // namespace gnss
