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

#include "gnss/tabio/structured.hpp"

#include <set>

#include "gnss/error.hpp"
#include "json.hpp"

namespace gnss {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& message) {
  throw Error(ErrorKind::MalformedDocument, message);
}

void reject_unknown_fields(const json& object, const std::set<std::string>& allowed,
                           const std::string& where) {
  for (const auto& [field, value] : object.items()) {
    if (!allowed.count(field)) {
      throw Error(ErrorKind::UnknownField, "unknown field '" + field + "' in " + where);
    }
  }
}

const json& field(const json& object, const std::string& name, const std::string& where) {
  const auto it = object.find(name);
  if (it == object.end()) malformed(where + " is missing the field '" + name + "'");
  return *it;
}

json param_to_json(const ParamKey& key) {
  if (key.is_pair()) return json{{"pair", json::array({param_to_json(key.left()), param_to_json(key.right())})}};
  return json{{"name", key.name()}, {"negated", key.negated()}};
}

ParamKey param_from_json(const json& node, const std::string& where) {
  if (!node.is_object()) malformed(where + " must be an object");
  if (node.contains("pair")) {
    reject_unknown_fields(node, {"pair"}, where);
    const json& sides = node["pair"];
    if (!sides.is_array() || sides.size() != 2) malformed(where + ".pair must be an array of two parameters");
    return ParamKey::pair(param_from_json(sides[0], where + ".pair[0]"),
                          param_from_json(sides[1], where + ".pair[1]"));
  }
  reject_unknown_fields(node, {"name", "negated"}, where);
  const json& name = field(node, "name", where);
  if (!name.is_string()) malformed(where + ".name must be a string");
  bool negated = false;
  if (node.contains("negated")) {
    if (!node["negated"].is_boolean()) malformed(where + ".negated must be a boolean");
    negated = node["negated"].get<bool>();
  }
  return ParamKey::atom(name.get<std::string>(), negated);
}

Triple triple_from_json(const json& node, const std::string& where) {
  if (!node.is_array() || node.size() != 3) {
    throw Error(ErrorKind::MalformedCell, where + " must be an array of three decimal strings, got " + node.dump());
  }
  Degree degrees[3];
  for (std::size_t k = 0; k < 3; ++k) {
    if (!node[k].is_string()) {
      throw Error(ErrorKind::MalformedCell, where + "[" + std::to_string(k) + "] must be a decimal string");
    }
    try {
      degrees[k] = Degree::parse(node[k].get<std::string>());
    } catch (const Error& e) {
      throw Error(e.kind(), where + ": " + e.detail());
    }
  }
  return {degrees[0], degrees[1], degrees[2]};
}

}  // namespace

SoftSet parse_structured(std::string_view text, ConstraintMode mode) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("not valid JSON: ") + e.what());
  }
  if (!root.is_object()) malformed("the document must be a JSON object");
  reject_unknown_fields(root, {"universe", "parameters", "cells"}, "the document");

  const json& objects = field(root, "universe", "the document");
  if (!objects.is_array()) malformed("'universe' must be an array of object ids");
  if (objects.empty()) throw Error(ErrorKind::EmptyTable, "'universe' is empty");
  std::vector<ObjectId> ids;
  for (const auto& id : objects) {
    if (!id.is_string()) malformed("'universe' must contain only strings");
    ids.emplace_back(id.get<std::string>());
  }
  auto universe = std::make_shared<const Universe>(std::move(ids));

  const json& declared = field(root, "parameters", "the document");
  if (!declared.is_array()) malformed("'parameters' must be an array");
  if (declared.empty()) throw Error(ErrorKind::EmptyParameterSet, "'parameters' is empty");
  std::vector<ParamKey> params;
  for (std::size_t p = 0; p < declared.size(); ++p) {
    auto key = param_from_json(declared[p], "parameters[" + std::to_string(p) + "]");
    if (contains(params, key)) {
      throw Error(ErrorKind::DuplicateParameter, "parameter '" + key.to_string() + "' appears twice");
    }
    params.push_back(std::move(key));
  }

  const json& cells = field(root, "cells", "the document");
  if (!cells.is_object()) malformed("'cells' must be an object keyed by parameter");
  std::vector<const json*> by_param(params.size(), nullptr);
  for (const auto& [name, column] : cells.items()) {
    const auto p = index_of(params, ParamKey::parse(name));
    if (!p) throw Error(ErrorKind::UnknownParameter, "cells['" + name + "'] names an undeclared parameter");
    if (by_param[*p]) malformed("cells lists parameter '" + name + "' twice");
    by_param[*p] = &column;
  }

  std::vector<SoftSet::Column> columns;
  for (std::size_t p = 0; p < params.size(); ++p) {
    const std::string where = "cells['" + params[p].to_string() + "']";
    if (!by_param[p]) malformed(where + " is missing");
    const json& column = *by_param[p];
    if (!column.is_object()) malformed(where + " must be an object keyed by object id");
    for (const auto& [object, value] : column.items()) {
      if (!universe->index_of(object)) malformed(where + " names unknown object '" + object + "'");
    }
    std::vector<Triple> members;
    for (const auto& id : *universe) {
      const auto it = column.find(id.str());
      if (it == column.end()) malformed(where + " has no cell for object '" + id.str() + "'");
      const Triple x = triple_from_json(*it, where + "['" + id.str() + "']");
      if (!satisfies(x, mode)) {
        throw Error(ErrorKind::ConstraintViolation, to_string(x) + " at " + where + "['" + id.str() +
                                                        "'] violates the '" +
                                                        std::string(to_string(mode)) + "' constraint");
      }
      members.push_back(x);
    }
    columns.push_back({params[p], std::move(members)});
  }
  return SoftSet(std::move(universe), std::move(columns), ConstraintMode::NeutrosophicOnly);
}

std::string serialize_structured(const SoftSet& s) {
  json root;
  json objects = json::array();
  for (const auto& id : s.universe()) objects.push_back(id.str());
  root["universe"] = std::move(objects);

  json params = json::array();
  for (const auto& key : s.params()) params.push_back(param_to_json(key));
  root["parameters"] = std::move(params);

  json cells = json::object();
  for (std::size_t p = 0; p < s.param_count(); ++p) {
    json column = json::object();
    for (std::size_t k = 0; k < s.object_count(); ++k) {
      const Triple& x = s.cell(p, k);
      column[s.universe()[k].str()] =
          json::array({x.truth.to_string(), x.indeterminacy.to_string(), x.falsity.to_string()});
    }
    cells[s.params()[p].to_string()] = std::move(column);
  }
  root["cells"] = std::move(cells);
  return root.dump(2) + "\n";
}

}  // namespace gnss
