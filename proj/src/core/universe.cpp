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

#include "gnss/universe.hpp"

#include <algorithm>
#include <set>

#include "gnss/error.hpp"

namespace gnss {

ObjectId::ObjectId(std::string name) : name_(std::move(name)) {
  const auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::InvalidIdentifier, "object id '" + name_ + "' " + why);
  };
  if (name_.empty()) fail("is empty");
  if (name_.front() == ' ' || name_.front() == '\t' || name_.back() == ' ' ||
      name_.back() == '\t') {
    fail("has surrounding whitespace");
  }
  for (char c : name_) {
    if (c == ',' || c == '(' || c == ')' || c == '"') fail(std::string("contains '") + c + "'");
    if (static_cast<unsigned char>(c) < 0x20) fail("contains a control character");
  }
}

Universe::Universe(std::vector<ObjectId> objects) : objects_(std::move(objects)) {
  std::set<std::string_view> seen;
  for (const auto& id : objects_) {
    if (!seen.insert(id.str()).second) {
      throw Error(ErrorKind::DuplicateObjectId, "object '" + id.str() + "' appears twice");
    }
  }
}

Universe Universe::of(const std::vector<std::string>& names) {
  std::vector<ObjectId> ids;
  ids.reserve(names.size());
  for (const auto& n : names) ids.emplace_back(n);
  return Universe(std::move(ids));
}

std::optional<std::size_t> Universe::index_of(std::string_view name) const noexcept {
  const auto it = std::find_if(objects_.begin(), objects_.end(),
                               [&](const ObjectId& id) { return id.str() == name; });
  if (it == objects_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - objects_.begin());
}

}  // namespace gnss
