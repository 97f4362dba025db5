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
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gnss/param_key.hpp"
#include "gnss/triple.hpp"
#include "gnss/universe.hpp"

namespace gnss {

/// Generalized neutrosophic set over a universe: one triple per object.
class NeutrosophicSet {
 public:
  /// Throws Error(ShapeMismatch) unless there is exactly one triple per object.
  NeutrosophicSet(std::shared_ptr<const Universe> universe, std::vector<Triple> members);

  const Universe& universe() const noexcept { return *universe_; }
  std::span<const Triple> members() const noexcept { return members_; }
  const Triple& operator[](std::size_t object) const { return members_[object]; }

  /// Throws Error(ShapeMismatch) for an object outside the universe.
  const Triple& at(std::string_view object) const;

  friend bool operator==(const NeutrosophicSet& a, const NeutrosophicSet& b) {
    return *a.universe_ == *b.universe_ && a.members_ == b.members_;
  }

 private:
  std::shared_ptr<const Universe> universe_;
  std::vector<Triple> members_;
};

/// A parameterized family of neutrosophic sets over one universe: the pair
/// (F, A) with F mapping every parameter of A to a NeutrosophicSet.
///
/// Values are immutable once built. Parameters keep their insertion order,
/// which is the column order of the tabular forms.
class SoftSet {
 public:
  struct Column {
    ParamKey key;
    std::vector<Triple> members;
  };

  /// Validates every triple against `mode` (ConstraintViolation), parameter
  /// uniqueness (DuplicateParameter) and column length (ShapeMismatch).
  SoftSet(std::shared_ptr<const Universe> universe, std::vector<Column> columns,
          ConstraintMode mode = ConstraintMode::GnsMin);
  SoftSet(Universe universe, std::vector<Column> columns,
          ConstraintMode mode = ConstraintMode::GnsMin);

  const Universe& universe() const noexcept { return *universe_; }
  const std::shared_ptr<const Universe>& shared_universe() const noexcept { return universe_; }
  std::span<const ParamKey> params() const noexcept { return params_; }
  std::size_t param_count() const noexcept { return params_.size(); }
  std::size_t object_count() const noexcept { return universe_->size(); }

  std::optional<std::size_t> find(const ParamKey& key) const noexcept;
  bool has(const ParamKey& key) const noexcept { return find(key).has_value(); }

  const NeutrosophicSet& column(std::size_t param) const { return columns_[param]; }
  /// Throws Error(UnknownParameter).
  const NeutrosophicSet& approximation(const ParamKey& key) const;
  const Triple& cell(std::size_t param, std::size_t object) const {
    return columns_[param][object];
  }

  /// First cell that does not satisfy `mode`, as (param, object).
  std::optional<std::pair<std::size_t, std::size_t>> first_violation(ConstraintMode mode) const;

  /// Structural identity: same universe, same parameters in the same order,
  /// same triples. Use soft_equal() for the order-insensitive set equality.
  friend bool operator==(const SoftSet& a, const SoftSet& b);

 private:
  std::shared_ptr<const Universe> universe_;
  std::vector<ParamKey> params_;
  std::vector<NeutrosophicSet> columns_;
};

}  // namespace gnss
