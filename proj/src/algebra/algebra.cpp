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

#include <algorithm>

#include "gnss/error.hpp"

namespace gnss {
namespace {

void require_common_universe(const SoftSet& a, const SoftSet& b) {
  if (a.shared_universe() == b.shared_universe()) return;
  if (!(a.universe() == b.universe())) {
    throw Error(ErrorKind::UniverseMismatch,
                "operands are not over the same universe (" + std::to_string(a.object_count()) +
                    " vs " + std::to_string(b.object_count()) + " objects, or different ids/order)");
  }
}

template <typename Combine>
std::vector<Triple> combine(const NeutrosophicSet& x, const NeutrosophicSet& y, Combine op) {
  std::vector<Triple> out;
  out.reserve(x.members().size());
  for (std::size_t k = 0; k < x.members().size(); ++k) out.push_back(op(x[k], y[k]));
  return out;
}

std::vector<Triple> copy_members(const NeutrosophicSet& x) {
  return {x.members().begin(), x.members().end()};
}

// Results of the operations are closed under every constraint mode they are
// fed with, so they are not re-validated.
SoftSet build(const SoftSet& like, std::vector<SoftSet::Column> columns) {
  return SoftSet(like.shared_universe(), std::move(columns), ConstraintMode::NeutrosophicOnly);
}

template <typename Combine>
SoftSet product(const SoftSet& a, const SoftSet& b, Combine op) {
  require_common_universe(a, b);
  std::vector<SoftSet::Column> columns;
  columns.reserve(a.param_count() * b.param_count());
  for (std::size_t p = 0; p < a.param_count(); ++p) {
    for (std::size_t q = 0; q < b.param_count(); ++q) {
      columns.push_back({ParamKey::pair(a.params()[p], b.params()[q]),
                         combine(a.column(p), b.column(q), op)});
    }
  }
  return build(a, std::move(columns));
}

}  // namespace

bool is_subset(const SoftSet& a, const SoftSet& b) {
  require_common_universe(a, b);
  for (std::size_t p = 0; p < a.param_count(); ++p) {
    const auto q = b.find(a.params()[p]);
    if (!q) return false;
    for (std::size_t k = 0; k < a.object_count(); ++k) {
      if (!is_contained_in(a.cell(p, k), b.cell(*q, k))) return false;
    }
  }
  return true;
}

bool soft_equal(const SoftSet& a, const SoftSet& b) { return is_subset(a, b) && is_subset(b, a); }

SoftSet complement(const SoftSet& a) {
  std::vector<SoftSet::Column> columns;
  columns.reserve(a.param_count());
  for (std::size_t p = 0; p < a.param_count(); ++p) {
    std::vector<Triple> members;
    members.reserve(a.object_count());
    for (const auto& x : a.column(p).members()) members.push_back(complement(x));
    columns.push_back({a.params()[p].negate(), std::move(members)});
  }
  return build(a, std::move(columns));
}

SoftSet null_set(std::shared_ptr<const Universe> universe, std::vector<ParamKey> params) {
  if (params.empty()) {
    throw Error(ErrorKind::EmptyParameterSet, "a null set needs at least one parameter");
  }
  std::vector<SoftSet::Column> columns;
  columns.reserve(params.size());
  for (auto& key : params) columns.push_back({std::move(key), std::vector<Triple>(universe->size())});
  return SoftSet(std::move(universe), std::move(columns), ConstraintMode::NeutrosophicOnly);
}

SoftSet null_set(const Universe& universe, std::vector<ParamKey> params) {
  return null_set(std::make_shared<const Universe>(universe), std::move(params));
}

bool is_null(const SoftSet& a) noexcept {
  for (std::size_t p = 0; p < a.param_count(); ++p) {
    const auto members = a.column(p).members();
    if (!std::all_of(members.begin(), members.end(), [](const Triple& x) { return x == Triple{}; })) {
      return false;
    }
  }
  return true;
}

SoftSet unite(const SoftSet& a, const SoftSet& b) {
  require_common_universe(a, b);
  std::vector<SoftSet::Column> columns;
  for (std::size_t p = 0; p < a.param_count(); ++p) {
    const auto q = b.find(a.params()[p]);
    columns.push_back({a.params()[p], q ? combine(a.column(p), b.column(*q),
                                                  [](const Triple& x, const Triple& y) {
                                                    return unite(x, y);
                                                  })
                                        : copy_members(a.column(p))});
  }
  for (std::size_t q = 0; q < b.param_count(); ++q) {
    if (!a.has(b.params()[q])) columns.push_back({b.params()[q], copy_members(b.column(q))});
  }
  return build(a, std::move(columns));
}

SoftSet intersect(const SoftSet& a, const SoftSet& b) {
  require_common_universe(a, b);
  std::vector<SoftSet::Column> columns;
  for (std::size_t p = 0; p < a.param_count(); ++p) {
    if (const auto q = b.find(a.params()[p])) {
      columns.push_back({a.params()[p],
                         combine(a.column(p), b.column(*q),
                                 [](const Triple& x, const Triple& y) { return intersect(x, y); })});
    }
  }
  if (columns.empty()) {
    throw Error(ErrorKind::EmptyParameterOverlap, "the operands share no parameter");
  }
  return build(a, std::move(columns));
}

SoftSet conjoin(const SoftSet& a, const SoftSet& b) {
  return product(a, b, [](const Triple& x, const Triple& y) { return intersect(x, y); });
}

SoftSet disjoin(const SoftSet& a, const SoftSet& b) {
  return product(a, b, [](const Triple& x, const Triple& y) { return unite(x, y); });
}

}  // namespace gnss
