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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gnss {

enum class ErrorKind {
  ConstraintViolation,
  DegreeOutOfRange,
  MalformedCell,
  MalformedDocument,
  UnknownField,
  InvalidIdentifier,
  DuplicateObjectId,
  DuplicateParameter,
  RaggedRow,
  EmptyTable,
  EmptyParameterSet,
  EmptyParameterOverlap,
  UniverseMismatch,
  UnknownParameter,
  UnknownFixture,
  ShapeMismatch,
};

std::string_view to_string(ErrorKind kind) noexcept;

// 1-based position inside a tabular document. Row 1 is the header line,
// column 1 is the object-id column.
struct Location {
  std::size_t row = 0;
  std::size_t column = 0;

  friend bool operator==(const Location&, const Location&) = default;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<Location> where = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<Location>& location() const noexcept { return where_; }
  const std::string& detail() const noexcept { return detail_; }

  // Same error, now pinned to a cell of the document being read.
  Error at(Location where) const;

 private:
  ErrorKind kind_;
  std::string detail_;
  std::optional<Location> where_;
};

}  // namespace gnss
