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

#include "gnss/tabio/csv.hpp"

#include <charconv>
#include <set>

#include "gnss/error.hpp"
#include "gnss/tabio/text.hpp"

namespace gnss {
namespace {

struct Row {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

struct Grid {
  std::size_t header_line = 0;
  std::vector<std::string> header;  // header[0] is the `U` corner
  std::vector<Row> rows;
};

template <typename Fn>
auto pinned(std::size_t row, std::size_t column, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw e.at(Location{row, e.location() ? e.location()->column : column});
  }
}

Grid read_grid(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw Error(ErrorKind::EmptyTable, "the document has no header line");

  Grid grid;
  grid.header_line = lines[0].number;
  grid.header = pinned(grid.header_line, 1, [&] { return split_csv_record(lines[0].text); });
  if (grid.header[0] != "U" && grid.header[0] != "u") {
    throw Error(ErrorKind::MalformedCell,
                "the header must start with 'U', got '" + grid.header[0] + "'",
                Location{grid.header_line, 1});
  }
  if (grid.header.size() == 1) {
    throw Error(ErrorKind::EmptyParameterSet, "the header lists no parameters",
                Location{grid.header_line, 1});
  }

  for (std::size_t k = 1; k < lines.size(); ++k) {
    Row row{lines[k].number, pinned(lines[k].number, 1, [&] { return split_csv_record(lines[k].text); })};
    if (row.fields.size() != grid.header.size()) {
      throw Error(ErrorKind::RaggedRow,
                  "expected " + std::to_string(grid.header.size()) + " fields, got " +
                      std::to_string(row.fields.size()),
                  Location{row.line, std::min(row.fields.size(), grid.header.size()) + 1});
    }
    grid.rows.push_back(std::move(row));
  }
  if (grid.rows.empty()) throw Error(ErrorKind::EmptyTable, "the table has no object rows");
  return grid;
}

std::vector<ParamKey> read_params(const Grid& grid) {
  std::vector<ParamKey> params;
  for (std::size_t c = 1; c < grid.header.size(); ++c) {
    auto key = pinned(grid.header_line, c + 1, [&] { return ParamKey::parse(grid.header[c]); });
    if (contains(params, key)) {
      throw Error(ErrorKind::DuplicateParameter, "parameter '" + key.to_string() + "' appears twice",
                  Location{grid.header_line, c + 1});
    }
    params.push_back(std::move(key));
  }
  return params;
}

std::vector<ObjectId> read_objects(const Grid& grid) {
  std::vector<ObjectId> ids;
  std::set<std::string> seen;
  for (const auto& row : grid.rows) {
    auto id = pinned(row.line, 1, [&] { return ObjectId(row.fields[0]); });
    if (!seen.insert(id.str()).second) {
      throw Error(ErrorKind::DuplicateObjectId, "object '" + id.str() + "' appears twice",
                  Location{row.line, 1});
    }
    ids.push_back(std::move(id));
  }
  return ids;
}

int parse_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(ErrorKind::MalformedCell, "expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::string header_line(std::span<const ParamKey> params) {
  std::string out = "U";
  for (const auto& key : params) out += "," + quote_csv_field(key.to_string());
  return out + "\n";
}

}  // namespace

SoftSet parse_csv(std::string_view text, ConstraintMode mode) {
  const Grid grid = read_grid(text);
  auto params = read_params(grid);
  auto universe = std::make_shared<const Universe>(read_objects(grid));

  std::vector<SoftSet::Column> columns;
  columns.reserve(params.size());
  for (std::size_t p = 0; p < params.size(); ++p) {
    std::vector<Triple> members;
    members.reserve(grid.rows.size());
    for (const auto& row : grid.rows) {
      const Triple x = pinned(row.line, p + 2, [&] { return parse_triple(row.fields[p + 1]); });
      if (!satisfies(x, mode)) {
        throw Error(ErrorKind::ConstraintViolation,
                    to_string(x) + " violates the '" + std::string(to_string(mode)) + "' constraint",
                    Location{row.line, p + 2});
      }
      members.push_back(x);
    }
    columns.push_back({std::move(params[p]), std::move(members)});
  }
  return SoftSet(std::move(universe), std::move(columns), ConstraintMode::NeutrosophicOnly);
}

TableDocument parse_csv_document(std::string_view text, std::string source, ConstraintMode mode) {
  return {std::move(source), parse_csv(text, mode), {}};
}

std::string serialize_csv(const SoftSet& s) {
  std::string out = header_line(s.params());
  for (std::size_t k = 0; k < s.object_count(); ++k) {
    out += s.universe()[k].str();
    for (std::size_t p = 0; p < s.param_count(); ++p) {
      out += ",\"" + to_string(s.cell(p, k)) + "\"";
    }
    out += "\n";
  }
  return out;
}

ComparisonMatrix parse_matrix_csv(std::string_view text) {
  const Grid grid = read_grid(text);
  ComparisonMatrix m{read_objects(grid), read_params(grid), {}};
  m.cells.reserve(m.rows.size() * m.cols.size());
  for (const auto& row : grid.rows) {
    for (std::size_t c = 1; c < row.fields.size(); ++c) {
      m.cells.push_back(pinned(row.line, c + 1, [&] { return parse_int(row.fields[c]); }));
    }
  }
  return m;
}

std::string serialize_matrix_csv(const ComparisonMatrix& m) {
  std::string out = header_line(m.cols);
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    out += m.rows[i].str();
    for (std::size_t j = 0; j < m.cols.size(); ++j) out += "," + std::to_string(m.at(i, j));
    out += "\n";
  }
  return out;
}

ScoreVector parse_scores_csv(std::string_view text) {
  const ComparisonMatrix m = parse_matrix_csv(text);
  if (m.cols.size() != 1 || !(m.cols[0] == ParamKey::atom("Score"))) {
    throw Error(ErrorKind::MalformedDocument, "a score table has the single column 'Score'");
  }
  return {m.rows, m.cells};
}

std::string serialize_scores_csv(const ScoreVector& s) {
  std::string out = "U,Score\n";
  for (std::size_t i = 0; i < s.objects.size(); ++i) {
    out += s.objects[i].str() + "," + std::to_string(s.scores[i]) + "\n";
  }
  return out;
}

}  // namespace gnss
