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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gnss {

/// A parameter of a soft set: either a named attribute, possibly negated
/// ("not bright"), or an ordered pair of parameters produced by AND / OR.
///
/// Attribute names compare case-insensitively ("Bright" == "bright") and keep
/// the spelling they were created with for display.
class ParamKey {
 public:
  /// Throws Error(InvalidIdentifier) for empty names, surrounding whitespace,
  /// any of `, | ( ) "`, control characters, or a leading "not ".
  static ParamKey atom(std::string name, bool negated = false);
  static ParamKey pair(ParamKey left, ParamKey right);

  /// Inverse of to_string(): "bright", "not bright", "bright|costly",
  /// "(a|b)|not c".
  static ParamKey parse(std::string_view text);

  bool is_atom() const noexcept { return std::holds_alternative<Atom>(node_); }
  bool is_pair() const noexcept { return std::holds_alternative<Pair>(node_); }

  // Atom accessors; calling them on a pair is a logic error.
  const std::string& name() const;
  bool negated() const;

  // Pair accessors; calling them on an atom is a logic error.
  const ParamKey& left() const;
  const ParamKey& right() const;

  /// Negates atoms; pairs negate pointwise. negate().negate() == *this.
  ParamKey negate() const;

  std::string to_string() const;

  friend bool operator==(const ParamKey& a, const ParamKey& b) noexcept;

 private:
  struct Atom {
    std::string name;
    bool negated = false;
  };
  struct Pair {
    std::shared_ptr<const ParamKey> left;
    std::shared_ptr<const ParamKey> right;
  };

  explicit ParamKey(Atom atom) : node_(std::move(atom)) {}
  explicit ParamKey(Pair pair) : node_(std::move(pair)) {}

  std::variant<Atom, Pair> node_;
};

/// Position of `key` in `keys`, if present.
std::optional<std::size_t> index_of(std::span<const ParamKey> keys, const ParamKey& key) noexcept;

inline bool contains(std::span<const ParamKey> keys, const ParamKey& key) noexcept {
  return index_of(keys, key).has_value();
}

/// The NOT set: every key negated, order preserved.
std::vector<ParamKey> negate(std::span<const ParamKey> keys);

}  // namespace gnss
