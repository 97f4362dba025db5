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
#include <span>
#include <vector>

#include "gnss/soft_set.hpp"

namespace gnss {

/// Integer matrix with one row per object and one column per parameter.
struct ComparisonMatrix {
  std::vector<ObjectId> rows;
  std::vector<ParamKey> cols;
  std::vector<int> cells;  // row-major

  int at(std::size_t row, std::size_t col) const { return cells[row * cols.size() + col]; }
  int& at(std::size_t row, std::size_t col) { return cells[row * cols.size() + col]; }

  friend bool operator==(const ComparisonMatrix&, const ComparisonMatrix&) = default;
};

/// Row sums of a comparison matrix, in universe order.
struct ScoreVector {
  std::vector<ObjectId> objects;
  std::vector<int> scores;

  friend bool operator==(const ScoreVector&, const ScoreVector&) = default;
};

struct RankEntry {
  ObjectId object;
  int score = 0;
  std::size_t place = 0;  // 1-based; tied objects share a place

  friend bool operator==(const RankEntry&, const RankEntry&) = default;
};

struct Ranking {
  std::vector<RankEntry> order;   // descending score, universe order within ties
  std::vector<ObjectId> winners;  // every object with the maximum score

  /// The first winner in universe order.
  const ObjectId& choice() const { return winners.front(); }
};

/// (F, P): the soft set cut down to `params`, in that order.
/// Throws Error(EmptyParameterSet) or Error(UnknownParameter).
SoftSet restrict(const SoftSet& s, std::span<const ParamKey> params);

/// For object i and parameter j, counts over the other objects k how often
/// T_i >= T_k (a), I_i >= I_k (d) and F_i >= F_k (c); the cell is a + d - c.
ComparisonMatrix comparison_matrix(const SoftSet& s);

ScoreVector scores(const ComparisonMatrix& m);

Ranking rank(const ScoreVector& s);

/// restrict, comparison_matrix, scores, rank.
Ranking decide(const SoftSet& s, std::span<const ParamKey> params);

}  // namespace gnss
