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

#include "gnss/tabio/diff.hpp"

#include "gnss/error.hpp"

namespace gnss {
namespace {

// Column of `actual` for each column of `expected`.
std::vector<std::size_t> match_columns(std::span<const ParamKey> expected,
                                       std::span<const ParamKey> actual) {
  if (expected.size() != actual.size()) {
    throw Error(ErrorKind::ShapeMismatch, "tables have " + std::to_string(expected.size()) +
                                              " and " + std::to_string(actual.size()) +
                                              " parameters");
  }
  std::vector<std::size_t> out;
  for (const auto& key : expected) {
    const auto q = index_of(actual, key);
    if (!q) throw Error(ErrorKind::ShapeMismatch, "parameter '" + key.to_string() + "' is missing");
    out.push_back(*q);
  }
  return out;
}

template <typename Objects>
void require_same_rows(const Objects& expected, const Objects& actual) {
  if (!(expected == actual)) {
    throw Error(ErrorKind::ShapeMismatch, "tables are not over the same objects in the same order");
  }
}

}  // namespace

DiffReport<Triple> diff_tables(const SoftSet& expected, const SoftSet& actual) {
  require_same_rows(expected.universe(), actual.universe());
  const auto columns = match_columns(expected.params(), actual.params());
  DiffReport<Triple> report;
  for (std::size_t p = 0; p < columns.size(); ++p) {
    for (std::size_t k = 0; k < expected.object_count(); ++k) {
      ++report.compared;
      const Triple& want = expected.cell(p, k);
      const Triple& got = actual.cell(columns[p], k);
      if (want != got) {
        report.cells.push_back({expected.universe()[k].str(), expected.params()[p].to_string(), want, got});
      }
    }
  }
  return report;
}

DiffReport<int> diff_tables(const ComparisonMatrix& expected, const ComparisonMatrix& actual) {
  require_same_rows(expected.rows, actual.rows);
  const auto columns = match_columns(expected.cols, actual.cols);
  DiffReport<int> report;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (std::size_t i = 0; i < expected.rows.size(); ++i) {
      ++report.compared;
      const int want = expected.at(i, j);
      const int got = actual.at(i, columns[j]);
      if (want != got) {
        report.cells.push_back({expected.rows[i].str(), expected.cols[j].to_string(), want, got});
      }
    }
  }
  return report;
}

}  // namespace gnss
