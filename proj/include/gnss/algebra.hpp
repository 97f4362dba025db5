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

#include <memory>
#include <vector>

#include "gnss/soft_set.hpp"

namespace gnss {

// Soft-set operations. Every binary operation requires both operands to be
// over the identical universe (same ids in the same order) and throws
// Error(UniverseMismatch) otherwise. Results list the left operand's
// parameters first.

/// a's parameters are a subset of b's and every triple of a is contained in
/// the corresponding triple of b.
bool is_subset(const SoftSet& a, const SoftSet& b);

/// Mutual subset: same parameter set (in any order) with identical triples.
bool soft_equal(const SoftSet& a, const SoftSet& b);

/// (F, A)^c: parameters become their negations, every triple is complemented.
SoftSet complement(const SoftSet& a);

/// The null set over `params`: every triple (0, 0, 0).
/// Throws Error(EmptyParameterSet) when `params` is empty.
SoftSet null_set(std::shared_ptr<const Universe> universe, std::vector<ParamKey> params);
SoftSet null_set(const Universe& universe, std::vector<ParamKey> params);

bool is_null(const SoftSet& a) noexcept;

/// Parameters A ∪ B. Keys present on one side only keep that side's triples;
/// shared keys combine with unite().
SoftSet unite(const SoftSet& a, const SoftSet& b);

/// Parameters A ∩ B combined with intersect().
/// Throws Error(EmptyParameterOverlap) when A and B share no key.
SoftSet intersect(const SoftSet& a, const SoftSet& b);

/// AND: parameters A × B (pairs in row-major order), triples combined with
/// intersect().
SoftSet conjoin(const SoftSet& a, const SoftSet& b);

/// OR: parameters A × B, triples combined with unite().
SoftSet disjoin(const SoftSet& a, const SoftSet& b);

}  // namespace gnss
