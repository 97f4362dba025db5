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

#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "gnss/decision.hpp"
#include "gnss/soft_set.hpp"
#include "gnss/tabio/csv.hpp"

namespace gnss {

// Reference tables of the blouse-selection and texture examples, kept exactly
// as originally published. A few published cells disagree with the operation
// that produced them; those cells are stored as published and carry a note.
//
//   table1 / ex3_3   blouse set (F, A), four parameters
//   table2, table3   size and texture sets over O1..O5
//   table4, table5   operands of the union/intersection/AND/OR examples
//   table6..table9   published union, intersection, AND, OR of table4/table5
//   table10          choice-parameter set for the ranking example
//   table11, scores  published comparison matrix and scores of table10
//   ex3_11           published complement of table1
//   ex3_13           null set over {Bright, Cheap, Colorful}
//   ex3_20_F/G/K     single-parameter sets of the distributivity example

using Fixture = std::variant<SoftSet, ComparisonMatrix, ScoreVector>;

std::span<const std::string_view> fixture_names() noexcept;
bool is_fixture(std::string_view name) noexcept;

/// Throws Error(UnknownFixture).
Fixture fixture(std::string_view name);

/// Soft-set fixtures only; throws Error(UnknownFixture) for anything else.
SoftSet soft_set_fixture(std::string_view name);
TableDocument fixture_document(std::string_view name);

/// Canonical CSV of any fixture.
std::string fixture_csv(std::string_view name);

}  // namespace gnss
