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

#include <string>
#include <string_view>

#include "gnss/soft_set.hpp"

namespace gnss {

// JSON document form of a soft set:
//
//   {
//     "universe": ["b1", "b2"],
//     "parameters": [
//       {"name": "bright", "negated": false},
//       {"pair": [{"name": "cheap", "negated": false}, {"name": "costly", "negated": true}]}
//     ],
//     "cells": {
//       "bright": {"b1": ["0.5", "0.6", "0.3"], "b2": ["0.4", "0.7", "0.2"]},
//       "cheap|not costly": {"b1": ["0.6", "0.3", "0.5"], "b2": ["0.7", "0.4", "0.3"]}
//     }
//   }
//
// Degrees are decimal strings so they round-trip exactly; cell maps are keyed
// by ParamKey::to_string(). Any field outside this layout is rejected with
// Error(UnknownField) naming it.

SoftSet parse_structured(std::string_view text, ConstraintMode mode = ConstraintMode::GnsMin);
std::string serialize_structured(const SoftSet& s);

}  // namespace gnss
