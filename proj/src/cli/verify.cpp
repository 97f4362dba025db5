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

#include "gnss/algebra.hpp"
#include "gnss/cli.hpp"
#include "gnss/decision.hpp"
#include "gnss/tabio/diff.hpp"

namespace gnss::cli {
namespace {

SoftSet soft(const FixtureLoader& load, std::string_view name) {
  return std::get<SoftSet>(load(name));
}

template <typename Cell>
TableCheck check(std::string table, const DiffReport<Cell>& report, std::string expected) {
  TableCheck out{std::move(table), locations(report), report.size(), std::move(expected), false};
  out.matches_expected = out.diff_locations == out.expected_locations;
  return out;
}

}  // namespace

std::vector<TableCheck> verify_paper(const FixtureLoader& load) {
  const SoftSet left = soft(load, "table4");
  const SoftSet right = soft(load, "table5");

  std::vector<TableCheck> checks;
  checks.push_back(check("Table 6", diff_tables(soft(load, "table6"), unite(left, right)), ""));
  checks.push_back(check("Table 7", diff_tables(soft(load, "table7"), intersect(left, right)),
                         "(b3,Colorful),(b4,Colorful)"));
  checks.push_back(check("Table 8", diff_tables(soft(load, "table8"), conjoin(left, right)), ""));
  checks.push_back(check("Table 9", diff_tables(soft(load, "table9"), disjoin(left, right)), ""));
  checks.push_back(check("Table 11",
                         diff_tables(std::get<ComparisonMatrix>(load("table11")),
                                     comparison_matrix(soft(load, "table10"))),
                         "(b5,Cheap),(b1,costly)"));
  checks.push_back(
      check("ex3_11", diff_tables(soft(load, "ex3_11"), complement(soft(load, "table1"))), ""));
  return checks;
}

}  // namespace gnss::cli
