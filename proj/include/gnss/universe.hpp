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

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gnss {

/// Name of one object of the universe, e.g. "b1".
class ObjectId {
 public:
  /// Throws Error(InvalidIdentifier) for empty names, surrounding whitespace,
  /// commas, parentheses, quotes or control characters.
  explicit ObjectId(std::string name);

  const std::string& str() const noexcept { return name_; }

  friend auto operator<=>(const ObjectId&, const ObjectId&) = default;

 private:
  std::string name_;
};

/// Ordered, duplicate-free list of objects. Order defines table rows and
/// breaks ties in rankings.
class Universe {
 public:
  Universe() = default;
  /// Throws Error(DuplicateObjectId).
  explicit Universe(std::vector<ObjectId> objects);
  static Universe of(const std::vector<std::string>& names);

  std::size_t size() const noexcept { return objects_.size(); }
  bool empty() const noexcept { return objects_.empty(); }
  const ObjectId& operator[](std::size_t k) const { return objects_[k]; }
  auto begin() const noexcept { return objects_.begin(); }
  auto end() const noexcept { return objects_.end(); }

  std::optional<std::size_t> index_of(std::string_view name) const noexcept;

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  std::vector<ObjectId> objects_;
};

}  // namespace gnss
