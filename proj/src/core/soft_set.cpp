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

#include "gnss/soft_set.hpp"

#include "gnss/error.hpp"

namespace gnss {

NeutrosophicSet::NeutrosophicSet(std::shared_ptr<const Universe> universe,
                                 std::vector<Triple> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
  if (members_.size() != universe_->size()) {
    throw Error(ErrorKind::ShapeMismatch,
                "expected " + std::to_string(universe_->size()) + " triples, got " +
                    std::to_string(members_.size()));
  }
}

const Triple& NeutrosophicSet::at(std::string_view object) const {
  const auto k = universe_->index_of(object);
  if (!k) throw Error(ErrorKind::ShapeMismatch, "no object '" + std::string(object) + "'");
  return members_[*k];
}

SoftSet::SoftSet(Universe universe, std::vector<Column> columns, ConstraintMode mode)
    : SoftSet(std::make_shared<const Universe>(std::move(universe)), std::move(columns), mode) {}

SoftSet::SoftSet(std::shared_ptr<const Universe> universe, std::vector<Column> columns,
                 ConstraintMode mode)
    : universe_(std::move(universe)) {
  params_.reserve(columns.size());
  columns_.reserve(columns.size());
  for (auto& c : columns) {
    if (contains(params_, c.key)) {
      throw Error(ErrorKind::DuplicateParameter,
                  "parameter '" + c.key.to_string() + "' appears twice");
    }
    for (std::size_t k = 0; k < c.members.size() && k < universe_->size(); ++k) {
      if (!satisfies(c.members[k], mode)) {
        throw Error(ErrorKind::ConstraintViolation,
                    to_string(c.members[k]) + " at (" + (*universe_)[k].str() + ", " +
                        c.key.to_string() + ") violates the '" +
                        std::string(to_string(mode)) + "' constraint");
      }
    }
    params_.push_back(std::move(c.key));
    columns_.emplace_back(universe_, std::move(c.members));
  }
}

std::optional<std::size_t> SoftSet::find(const ParamKey& key) const noexcept {
  return index_of(params_, key);
}

const NeutrosophicSet& SoftSet::approximation(const ParamKey& key) const {
  const auto p = find(key);
  if (!p) throw Error(ErrorKind::UnknownParameter, "no parameter '" + key.to_string() + "'");
  return columns_[*p];
}

std::optional<std::pair<std::size_t, std::size_t>> SoftSet::first_violation(
    ConstraintMode mode) const {
  for (std::size_t p = 0; p < columns_.size(); ++p) {
    for (std::size_t k = 0; k < universe_->size(); ++k) {
      if (!satisfies(columns_[p][k], mode)) return std::pair{p, k};
    }
  }
  return std::nullopt;
}

bool operator==(const SoftSet& a, const SoftSet& b) {
  return *a.universe_ == *b.universe_ && a.params_ == b.params_ && a.columns_ == b.columns_;
}

}  // namespace gnss
