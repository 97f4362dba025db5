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

#include "gnss/decision.hpp"

#include <algorithm>
#include <numeric>

#include "gnss/error.hpp"

namespace gnss {

SoftSet restrict(const SoftSet& s, std::span<const ParamKey> params) {
  if (params.empty()) {
    throw Error(ErrorKind::EmptyParameterSet, "no choice parameters given");
  }
  std::vector<SoftSet::Column> columns;
  columns.reserve(params.size());
  for (const auto& key : params) {
    const auto& column = s.approximation(key);
    columns.push_back({s.params()[*s.find(key)],
                       std::vector<Triple>(column.members().begin(), column.members().end())});
  }
  return SoftSet(s.shared_universe(), std::move(columns), ConstraintMode::NeutrosophicOnly);
}

ComparisonMatrix comparison_matrix(const SoftSet& s) {
  const std::size_t n = s.object_count();
  const std::size_t m = s.param_count();
  ComparisonMatrix out{{s.universe().begin(), s.universe().end()},
                       {s.params().begin(), s.params().end()},
                       std::vector<int>(n * m, 0)};

  for (std::size_t j = 0; j < m; ++j) {
    const auto column = s.column(j).members();
    for (std::size_t i = 0; i < n; ++i) {
      int truth = 0;
      int indeterminacy = 0;
      int falsity = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i) continue;
        truth += column[i].truth >= column[k].truth;
        indeterminacy += column[i].indeterminacy >= column[k].indeterminacy;
        falsity += column[i].falsity >= column[k].falsity;
      }
      out.at(i, j) = truth + indeterminacy - falsity;
    }
  }
  return out;
}

ScoreVector scores(const ComparisonMatrix& m) {
  ScoreVector out{m.rows, std::vector<int>(m.rows.size(), 0)};
  const std::size_t width = m.cols.size();
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    const auto row = m.cells.begin() + static_cast<std::ptrdiff_t>(i * width);
    out.scores[i] = std::accumulate(row, row + static_cast<std::ptrdiff_t>(width), 0);
  }
  return out;
}

Ranking rank(const ScoreVector& s) {
  std::vector<std::size_t> index(s.objects.size());
  std::iota(index.begin(), index.end(), std::size_t{0});
  std::stable_sort(index.begin(), index.end(),
                   [&](std::size_t a, std::size_t b) { return s.scores[a] > s.scores[b]; });

  Ranking out;
  std::size_t place = 0;
  for (std::size_t pos = 0; pos < index.size(); ++pos) {
    const std::size_t k = index[pos];
    if (pos == 0 || s.scores[k] != s.scores[index[pos - 1]]) ++place;
    out.order.push_back({s.objects[k], s.scores[k], place});
    if (place == 1) out.winners.push_back(s.objects[k]);
  }
  return out;
}

Ranking decide(const SoftSet& s, std::span<const ParamKey> params) {
  return rank(scores(comparison_matrix(restrict(s, params))));
}

}  // namespace gnss
