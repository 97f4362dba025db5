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

#include "gnss/param_key.hpp"

#include <algorithm>
#include <cassert>

#include "gnss/error.hpp"

namespace gnss {
namespace {

constexpr std::string_view kNotPrefix = "not ";

char fold(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) { return fold(x) == fold(y); });
}

bool is_space(char c) { return c == ' ' || c == '\t'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool has_not_prefix(std::string_view s) {
  return s.size() >= kNotPrefix.size() && iequals(s.substr(0, kNotPrefix.size()), kNotPrefix);
}

void check_atom_name(std::string_view name) {
  const auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::InvalidIdentifier,
                "parameter name '" + std::string(name) + "' " + why);
  };
  if (name.empty()) fail("is empty");
  if (is_space(name.front()) || is_space(name.back())) fail("has surrounding whitespace");
  for (char c : name) {
    if (c == ',' || c == '|' || c == '(' || c == ')' || c == '"') {
      fail(std::string("contains '") + c + "'");
    }
    if (static_cast<unsigned char>(c) < 0x20) fail("contains a control character");
  }
  if (has_not_prefix(name)) fail("starts with the negation prefix 'not '");
}

// True when `s` is "( ... )" with the outer parentheses matching each other.
bool wrapped_in_parens(std::string_view s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
  int depth = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '(') ++depth;
    if (s[k] == ')') --depth;
    if (depth == 0 && k + 1 < s.size()) return false;
  }
  return true;
}

}  // namespace

ParamKey ParamKey::atom(std::string name, bool negated) {
  check_atom_name(name);
  return ParamKey(Atom{std::move(name), negated});
}

ParamKey ParamKey::pair(ParamKey left, ParamKey right) {
  return ParamKey(Pair{std::make_shared<const ParamKey>(std::move(left)),
                       std::make_shared<const ParamKey>(std::move(right))});
}

ParamKey ParamKey::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw Error(ErrorKind::InvalidIdentifier, "empty parameter name");

  std::vector<std::size_t> bars;
  int depth = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '(') {
      ++depth;
    } else if (s[k] == ')') {
      if (--depth < 0) break;
    } else if (s[k] == '|' && depth == 0) {
      bars.push_back(k);
    }
  }
  if (depth != 0) {
    throw Error(ErrorKind::InvalidIdentifier,
                "unbalanced parentheses in parameter '" + std::string(s) + "'");
  }

  if (bars.size() > 1) {
    throw Error(ErrorKind::InvalidIdentifier,
                "ambiguous pair '" + std::string(s) + "'; parenthesize nested pairs");
  }
  if (bars.size() == 1) {
    return pair(parse(s.substr(0, bars[0])), parse(s.substr(bars[0] + 1)));
  }
  if (wrapped_in_parens(s)) return parse(s.substr(1, s.size() - 2));

  if (has_not_prefix(s)) return atom(std::string(trim(s.substr(kNotPrefix.size()))), true);
  return atom(std::string(s), false);
}

const std::string& ParamKey::name() const {
  assert(is_atom());
  return std::get<Atom>(node_).name;
}

bool ParamKey::negated() const {
  assert(is_atom());
  return std::get<Atom>(node_).negated;
}

const ParamKey& ParamKey::left() const {
  assert(is_pair());
  return *std::get<Pair>(node_).left;
}

const ParamKey& ParamKey::right() const {
  assert(is_pair());
  return *std::get<Pair>(node_).right;
}

ParamKey ParamKey::negate() const {
  if (const auto* a = std::get_if<Atom>(&node_)) return ParamKey(Atom{a->name, !a->negated});
  return pair(left().negate(), right().negate());
}

std::string ParamKey::to_string() const {
  if (const auto* a = std::get_if<Atom>(&node_)) {
    return a->negated ? std::string(kNotPrefix) + a->name : a->name;
  }
  const auto side = [](const ParamKey& k) {
    return k.is_pair() ? "(" + k.to_string() + ")" : k.to_string();
  };
  return side(left()) + "|" + side(right());
}

bool operator==(const ParamKey& a, const ParamKey& b) noexcept {
  if (a.is_atom() != b.is_atom()) return false;
  if (a.is_atom()) {
    const auto& x = std::get<ParamKey::Atom>(a.node_);
    const auto& y = std::get<ParamKey::Atom>(b.node_);
    return x.negated == y.negated && iequals(x.name, y.name);
  }
  return a.left() == b.left() && a.right() == b.right();
}

std::optional<std::size_t> index_of(std::span<const ParamKey> keys, const ParamKey& key) noexcept {
  const auto it = std::find(keys.begin(), keys.end(), key);
  if (it == keys.end()) return std::nullopt;
  return static_cast<std::size_t>(it - keys.begin());
}

std::vector<ParamKey> negate(std::span<const ParamKey> keys) {
  std::vector<ParamKey> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(k.negate());
  return out;
}

}  // namespace gnss
