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

#include "gnss/tabio/fixtures.hpp"

#include <algorithm>
#include <vector>

#include "gnss/error.hpp"

namespace gnss {
namespace {

enum class Kind { Soft, Matrix, Scores };

struct Entry {
  std::string_view name;
  std::string_view source;
  Kind kind;
  std::string_view csv;
  std::vector<CellNote> notes;
};

constexpr std::string_view kTable1 = R"(U,bright,cheap,costly,colorful
b1,(0.5, 0.6, 0.3),(0.6, 0.3, 0.5),(0.7, 0.4, 0.3),(0.8, 0.1, 0.4)
b2,(0.4, 0.7, 0.2),(0.7, 0.4, 0.3),(0.6, 0.1, 0.2),(0.4, 0.2, 0.6)
b3,(0.6, 0.2, 0.3),(0.8, 0.1, 0.2),(0.7, 0.2, 0.5),(0.3, 0.6, 0.4)
b4,(0.7, 0.3, 0.2),(0.7, 0.1, 0.3),(0.5, 0.2, 0.6),(0.4, 0.8, 0.5)
b5,(0.8, 0.2, 0.3),(0.8, 0.3, 0.4),(0.7, 0.3, 0.2),(0.3, 0.5, 0.7)
)";

constexpr std::string_view kTable2 = R"(U,small,large,colorful
O1,(0.4, 0.4, 0.6),(0.3, 0.2, 0.7),(0.4, 0.7, 0.5)
O2,(0.3, 0.5, 0.4),(0.4, 0.7, 0.8),(0.6, 0.3, 0.4)
O3,(0.6, 0.3, 0.5),(0.3, 0.2, 0.6),(0.4, 0.4, 0.8)
O4,(0.5, 0.1, 0.6),(0.1, 0.6, 0.7),(0.3, 0.5, 0.8)
O5,(0.3, 0.4, 0.4),(0.3, 0.1, 0.6),(0.5, 0.4, 0.4)
)";

constexpr std::string_view kTable3 = R"(U,Small,Large,Colorful,Very smooth
O1,(0.6, 0.3, 0.3),(0.7, 0.1, 0.5),(0.5, 0.1, 0.4),(0.1, 0.5, 0.4)
O2,(0.7, 0.1, 0.2),(0.4, 0.2, 0.3),(0.7, 0.3, 0.2),(0.5, 0.2, 0.3)
O3,(0.6, 0.2, 0.5),(0.7, 0.1, 0.4),(0.6, 0.3, 0.3),(0.2, 0.5, 0.4)
O4,(0.8, 0.1, 0.4),(0.3, 0.5, 0.4),(0.4, 0.3, 0.7),(0.4, 0.4, 0.5)
O5,(0.5, 0.2, 0.2),(0.4, 0.1, 0.5),(0.6, 0.2, 0.3),(0.5, 0.6, 0.3)
)";

constexpr std::string_view kTable4 = R"(U,Bright,Cheap,Colorful
b1,(0.6, 0.3, 0.5),(0.7, 0.3, 0.4),(0.4, 0.2, 0.6)
b2,(0.5, 0.1, 0.8),(0.6, 0.1, 0.3),(0.6, 0.4, 0.4)
b3,(0.7, 0.4, 0.3),(0.8, 0.3, 0.5),(0.5, 0.7, 0.2)
b4,(0.8, 0.4, 0.1),(0.6, 0.3, 0.2),(0.8, 0.2, 0.3)
b5,(0.6, 0.3, 0.2),(0.7, 0.3, 0.5),(0.3, 0.6, 0.5)
)";

constexpr std::string_view kTable5 = R"(U,Costly,Colorful
b1,(0.6, 0.2, 0.3),(0.4, 0.6, 0.2)
b2,(0.2, 0.7, 0.2),(0.2, 0.8, 0.3)
b3,(0.3, 0.6, 0.5),(0.6, 0.3, 0.4)
b4,(0.8, 0.4, 0.1),(0.2, 0.8, 0.3)
b5,(0.7, 0.1, 0.4),(0.5, 0.6, 0.4)
)";

constexpr std::string_view kTable6 = R"(U,Bright,Cheap,Colorful,Costly
b1,(0.6, 0.3, 0.5),(0.7, 0.3, 0.4),(0.4, 0.2, 0.2),(0.6, 0.2, 0.3)
b2,(0.5, 0.1, 0.8),(0.6, 0.1, 0.3),(0.6, 0.4, 0.3),(0.2, 0.7, 0.2)
b3,(0.7, 0.4, 0.3),(0.8, 0.3, 0.5),(0.6, 0.3, 0.2),(0.3, 0.6, 0.5)
b4,(0.8, 0.4, 0.1),(0.6, 0.3, 0.2),(0.8, 0.2, 0.3),(0.8, 0.4, 0.1)
b5,(0.6, 0.3, 0.2),(0.7, 0.3, 0.5),(0.5, 0.6, 0.4),(0.7, 0.1, 0.4)
)";

constexpr std::string_view kTable7 = R"(U,Colorful
b1,(0.4, 0.2, 0.6)
b2,(0.2, 0.4, 0.4)
b3,(0.6, 0.3, 0.4)
b4,(0.8, 0.2, 0.3)
b5,(0.3, 0.6, 0.5)
)";

constexpr std::string_view kTable8 =
    R"(U,bright|costly,bright|Colorful,cheap|costly,cheap|colorful,colorful|costly,colorful|colorful
b1,(0.6, 0.2, 0.5),(0.4, 0.3, 0.5),(0.6, 0.2, 0.4),(0.4, 0.3, 0.4),(0.4, 0.2, 0.6),(0.4, 0.2, 0.6)
b2,(0.2, 0.1, 0.8),(0.2, 0.1, 0.8),(0.2, 0.1, 0.3),(0.2, 0.1, 0.3),(0.2, 0.4, 0.4),(0.2, 0.4, 0.4)
b3,(0.3, 0.4, 0.5),(0.6, 0.3, 0.4),(0.3, 0.3, 0.5),(0.6, 0.3, 0.5),(0.3, 0.6, 0.5),(0.5, 0.3, 0.4)
b4,(0.8, 0.4, 0.1),(0.2, 0.4, 0.3),(0.6, 0.3, 0.2),(0.2, 0.3, 0.3),(0.8, 0.2, 0.3),(0.2, 0.2, 0.3)
b5,(0.6, 0.1, 0.4),(0.5, 0.3, 0.4),(0.7, 0.1, 0.5),(0.5, 0.3, 0.5),(0.3, 0.1, 0.5),(0.3, 0.6, 0.5)
)";

constexpr std::string_view kTable9 =
    R"(U,bright|costly,bright|colorful,cheap|costly,cheap|colorful,colorful|costly,colorful|colorful
b1,(0.6, 0.2, 0.3),(0.6, 0.3, 0.2),(0.7, 0.2, 0.3),(0.7, 0.3, 0.2),(0.6, 0.2, 0.3),(0.4, 0.2, 0.2)
b2,(0.5, 0.1, 0.2),(0.5, 0.1, 0.3),(0.6, 0.1, 0.2),(0.6, 0.1, 0.3),(0.6, 0.4, 0.2),(0.6, 0.4, 0.3)
b3,(0.7, 0.4, 0.3),(0.7, 0.3, 0.3),(0.8, 0.3, 0.5),(0.8, 0.3, 0.4),(0.5, 0.6, 0.2),(0.5, 0.7, 0.2)
b4,(0.8, 0.4, 0.1),(0.8, 0.4, 0.1),(0.8, 0.3, 0.1),(0.6, 0.3, 0.2),(0.8, 0.2, 0.1),(0.8, 0.2, 0.3)
b5,(0.7, 0.1, 0.2),(0.6, 0.3, 0.4),(0.7, 0.1, 0.4),(0.7, 0.3, 0.4),(0.7, 0.1, 0.4),(0.5, 0.6, 0.4)
)";

constexpr std::string_view kTable10 = R"(U,Cheap,Colorful,Polystyreneing,costly,Bright
b1,(0.6, 0.3, 0.4),(0.5, 0.2, 0.6),(0.5, 0.3, 0.4),(0.8, 0.2, 0.3),(0.6, 0.3, 0.2)
b2,(0.7, 0.2, 0.5),(0.6, 0.3, 0.4),(0.4, 0.2, 0.6),(0.4, 0.8, 0.3),(0.8, 0.1, 0.2)
b3,(0.8, 0.3, 0.4),(0.8, 0.5, 0.1),(0.3, 0.5, 0.6),(0.7, 0.2, 0.1),(0.7, 0.2, 0.5)
b4,(0.7, 0.5, 0.2),(0.4, 0.8, 0.3),(0.8, 0.2, 0.4),(0.8, 0.3, 0.4),(0.8, 0.3, 0.4)
b5,(0.3, 0.8, 0.4),(0.3, 0.6, 0.1),(0.7, 0.3, 0.2),(0.6, 0.2, 0.4),(0.6, 0.4, 0.2)
)";

constexpr std::string_view kTable11 = R"(U,Cheap,Colorful,Polystyreneing,costly,Bright
b1,0,-2,3,0,2
b2,-1,1,-2,2,2
b3,3,5,0,4,-1
b4,6,3,3,3,4
b5,7,2,6,-1,3
)";

constexpr std::string_view kScores = R"(U,Score
b1,3
b2,2
b3,11
b4,19
b5,17
)";

constexpr std::string_view kEx311 = R"(U,not bright,not cheap,not costly,not colorful
b1,(0.3, 0.6, 0.5),(0.5, 0.3, 0.6),(0.3, 0.4, 0.7),(0.4, 0.1, 0.8)
b2,(0.2, 0.7, 0.4),(0.3, 0.4, 0.7),(0.2, 0.1, 0.6),(0.6, 0.2, 0.4)
b3,(0.3, 0.2, 0.6),(0.2, 0.1, 0.8),(0.5, 0.2, 0.7),(0.4, 0.6, 0.3)
b4,(0.2, 0.3, 0.7),(0.3, 0.1, 0.7),(0.6, 0.2, 0.5),(0.5, 0.8, 0.4)
b5,(0.3, 0.2, 0.8),(0.4, 0.3, 0.8),(0.2, 0.3, 0.7),(0.7, 0.5, 0.3)
)";

constexpr std::string_view kEx313 = R"(U,Bright,Cheap,Colorful
b1,(0, 0, 0),(0, 0, 0),(0, 0, 0)
b2,(0, 0, 0),(0, 0, 0),(0, 0, 0)
b3,(0, 0, 0),(0, 0, 0),(0, 0, 0)
b4,(0, 0, 0),(0, 0, 0),(0, 0, 0)
b5,(0, 0, 0),(0, 0, 0),(0, 0, 0)
)";

constexpr std::string_view kEx320F = R"(U,e
b1,(0.6, 0.3, 0.1)
b2,(0.4, 0.7, 0.5)
b3,(0.4, 0.1, 0.8)
)";

constexpr std::string_view kEx320G = R"(U,e
b1,(0.2, 0.2, 0.6)
b2,(0.7, 0.2, 0.4)
b3,(0.1, 0.6, 0.7)
)";

constexpr std::string_view kEx320K = R"(U,e
b1,(0.3, 0.8, 0.2)
b2,(0.4, 0.1, 0.6)
b3,(0.9, 0.1, 0.2)
)";

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    const std::string published = "published value; recomputation gives ";
    std::vector<Entry> e;
    e.push_back({"table1", "Table 1", Kind::Soft, kTable1, {}});
    e.push_back({"table2", "Table 2", Kind::Soft, kTable2, {}});
    e.push_back({"table3", "Table 3", Kind::Soft, kTable3, {}});
    e.push_back({"table4", "Table 4", Kind::Soft, kTable4, {}});
    e.push_back({"table5", "Table 5", Kind::Soft, kTable5, {}});
    e.push_back({"table6", "Table 6", Kind::Soft, kTable6, {}});
    e.push_back({"table7", "Table 7", Kind::Soft, kTable7,
                 {{"b3", "Colorful", published + "(0.5, 0.3, 0.4)"},
                  {"b4", "Colorful", published + "(0.2, 0.2, 0.3)"}}});
    e.push_back({"table8", "Table 8", Kind::Soft, kTable8, {}});
    e.push_back({"table9", "Table 9", Kind::Soft, kTable9,
                 {{"b5", "bright|colorful", published + "(0.6, 0.3, 0.2)"},
                  {"b3", "colorful|colorful", published + "(0.6, 0.3, 0.2)"}}});
    e.push_back({"table10", "Table 10", Kind::Soft, kTable10, {}});
    e.push_back({"table11", "Table 11", Kind::Matrix, kTable11,
                 {{"b5", "Cheap", published + "1"}, {"b1", "costly", published + "4"}}});
    e.push_back({"scores", "Score table", Kind::Scores, kScores,
                 {{"b1", "Score", published + "7"}, {"b5", "Score", published + "11"}}});
    e.push_back({"ex3_3", "ex3_3", Kind::Soft, kTable1, {}});
    e.push_back({"ex3_11", "ex3_11", Kind::Soft, kEx311, {}});
    e.push_back({"ex3_13", "ex3_13", Kind::Soft, kEx313,
                 {{"*", "Cheap", "published with two components per cell, read as (0, 0, 0)"},
                  {"*", "Colorful", "published with two components per cell, read as (0, 0, 0)"}}});
    e.push_back({"ex3_20_F", "ex3_20_F", Kind::Soft, kEx320F, {}});
    e.push_back({"ex3_20_G", "ex3_20_G", Kind::Soft, kEx320G, {}});
    e.push_back({"ex3_20_K", "ex3_20_K", Kind::Soft, kEx320K, {}});
    return e;
  }();
  return entries;
}

const std::vector<std::string_view>& names() {
  static const std::vector<std::string_view> list = [] {
    std::vector<std::string_view> out;
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
  }();
  return list;
}

const Entry& lookup(std::string_view name) {
  const auto& e = registry();
  const auto it = std::find_if(e.begin(), e.end(), [&](const Entry& x) { return x.name == name; });
  if (it == e.end()) {
    throw Error(ErrorKind::UnknownFixture, "no fixture named '" + std::string(name) + "'");
  }
  return *it;
}

}  // namespace

std::span<const std::string_view> fixture_names() noexcept { return names(); }

bool is_fixture(std::string_view name) noexcept {
  const auto& list = names();
  return std::find(list.begin(), list.end(), name) != list.end();
}

Fixture fixture(std::string_view name) {
  const Entry& e = lookup(name);
  switch (e.kind) {
    case Kind::Soft: return parse_csv(e.csv);
    case Kind::Matrix: return parse_matrix_csv(e.csv);
    case Kind::Scores: return parse_scores_csv(e.csv);
  }
  throw Error(ErrorKind::UnknownFixture, std::string(name));
}

SoftSet soft_set_fixture(std::string_view name) {
  const Entry& e = lookup(name);
  if (e.kind != Kind::Soft) {
    throw Error(ErrorKind::UnknownFixture, "fixture '" + std::string(name) + "' is not a soft set");
  }
  return parse_csv(e.csv);
}

TableDocument fixture_document(std::string_view name) {
  const Entry& e = lookup(name);
  TableDocument doc{std::string(e.source), soft_set_fixture(name), e.notes};
  return doc;
}

std::string fixture_csv(std::string_view name) {
  return std::visit(
      [](const auto& value) -> std::string {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, SoftSet>) return serialize_csv(value);
        else if constexpr (std::is_same_v<T, ComparisonMatrix>) return serialize_matrix_csv(value);
        else return serialize_scores_csv(value);
      },
      fixture(name));
}

}  // namespace gnss
