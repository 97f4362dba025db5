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

#include "gnss/error.hpp"

namespace gnss {
namespace {

std::string compose(ErrorKind kind, const std::string& message,
                    const std::optional<Location>& where) {
  std::string text(to_string(kind));
  text += ": ";
  text += message;
  if (where) {
    text += " (row " + std::to_string(where->row) + ", column " +
            std::to_string(where->column) + ")";
  }
  return text;
}

}  // namespace

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::MalformedCell: return "MalformedCell";
    case ErrorKind::MalformedDocument: return "MalformedDocument";
    case ErrorKind::UnknownField: return "UnknownField";
    case ErrorKind::InvalidIdentifier: return "InvalidIdentifier";
    case ErrorKind::DuplicateObjectId: return "DuplicateObjectId";
    case ErrorKind::DuplicateParameter: return "DuplicateParameter";
    case ErrorKind::RaggedRow: return "RaggedRow";
    case ErrorKind::EmptyTable: return "EmptyTable";
    case ErrorKind::EmptyParameterSet: return "EmptyParameterSet";
    case ErrorKind::EmptyParameterOverlap: return "EmptyParameterOverlap";
    case ErrorKind::UniverseMismatch: return "UniverseMismatch";
    case ErrorKind::UnknownParameter: return "UnknownParameter";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<Location> where)
    : std::runtime_error(compose(kind, message, where)),
      kind_(kind),
      detail_(message),
      where_(where) {}

Error Error::at(Location where) const { return Error(kind_, detail_, where); }

}  // namespace gnss
