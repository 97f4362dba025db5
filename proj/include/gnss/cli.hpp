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

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gnss/tabio/fixtures.hpp"

namespace gnss::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainFailure = 1,  // validation failure or an operation rejected its inputs
  kParseFailure = 2,   // unreadable or malformed input
  kUsage = 3,
};

/// Runs one command line (without the program name). Data goes to `out`,
/// messages to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Recomputation of one published table from its inputs.
struct TableCheck {
  std::string table;
  std::string diff_locations;      // "(b5,Cheap),(b1,costly)"
  std::size_t diff_count = 0;
  std::string expected_locations;  // the known errata of that table
  bool matches_expected = false;
};

using FixtureLoader = std::function<Fixture(std::string_view)>;

/// Recomputes the union, intersection, AND, OR, complement and comparison
/// matrix tables and diffs them against the published fixtures.
std::vector<TableCheck> verify_paper(const FixtureLoader& load = [](std::string_view name) {
  return fixture(name);
});

}  // namespace gnss::cli
