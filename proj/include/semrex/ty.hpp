// Copyright 2026 The Semrex Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEMREX_TY_HPP
#define SEMREX_TY_HPP

#include <string>

namespace semrex {

// A point of the type lattice: Any | CharSeq | Semantic(name) | Optional(CharSeq |
// Semantic(name)), plus an internal uninhabited bottom NoType used for the meet of
// incomparable semantic names. Optional never nests, and Any/NoType are never optional.
struct Ty {
  enum class Kind { Any, CharSeq, Semantic, NoType };

  Kind kind = Kind::Any;
  bool optional = false;
  std::string name;  // Semantic only.

  static Ty any() { return {}; }
  static Ty char_seq(bool opt = false) { return {Kind::CharSeq, opt, {}}; }
  static Ty semantic(std::string n, bool opt = false) {
    return {Kind::Semantic, opt, std::move(n)};
  }
  static Ty no_type() { return {Kind::NoType, false, {}}; }

  bool is_any() const { return kind == Kind::Any; }
  bool is_no_type() const { return kind == Kind::NoType; }
  bool is_semantic() const { return kind == Kind::Semantic; }

  // Drops an Optional wrapper (identity on non-optional types).
  Ty stripped() const {
    Ty t = *this;
    t.optional = false;
    return t;
  }
  // Adds an Optional wrapper; Any and NoType stay as they are.
  Ty wrapped() const {
    Ty t = *this;
    if (kind == Kind::CharSeq || kind == Kind::Semantic) t.optional = true;
    return t;
  }

  bool operator==(const Ty &o) const {
    return kind == o.kind && optional == o.optional && name == o.name;
  }
  bool operator!=(const Ty &o) const { return !(*this == o); }
};

std::string print_ty(const Ty &t);

}  // namespace semrex

#endif
