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

#include "semrex/typesys.hpp"

#include <map>

#include "semrex/oracle.hpp"

namespace semrex {

namespace {

// Fixed built-in forest: child -> parent.
const std::map<std::string, std::string> &parent_table() {
  static const std::map<std::string, std::string> t = {
      {"Year", "Date"},        {"Month", "Date"},      {"Day", "Date"},
      {"Hour", "Time"},        {"Minute", "Time"},     {"Second", "Time"},
      {"Country", "Place"},    {"City", "Place"},      {"Institution", "Organization"},
      {"Company", "Organization"}, {"Integer", "Number"}, {"Float", "Number"},
  };
  return t;
}

const std::vector<std::string> &roots() {
  static const std::vector<std::string> r = {
      "Number", "Date",   "Time",        "Place",       "Organization", "Person",
      "Product", "Event", "Work of Art", "Location",    "Nationality",
  };
  return r;
}

}  // namespace

const std::vector<std::string> &builtin_type_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v = roots();
    for (auto &kv : parent_table()) v.push_back(kv.first);
    return v;
  }();
  return names;
}

bool is_builtin_type_name(const std::string &name) {
  for (auto &n : builtin_type_names())
    if (n == name) return true;
  return false;
}

bool builtin_name_subtype(const std::string &a, const std::string &b) {
  std::string cur = a;
  for (;;) {
    if (cur == b) return true;
    auto it = parent_table().find(cur);
    if (it == parent_table().end()) return false;
    cur = it->second;
  }
}

bool name_subtype(const std::string &a, const std::string &b, Oracle *oracle) {
  if (a == b) return true;
  bool ab = is_builtin_type_name(a), bb = is_builtin_type_name(b);
  if (ab && bb) return builtin_name_subtype(a, b);
  return oracle != nullptr && oracle->user_subtype(a, b);
}

bool subtype(const Ty &t1, const Ty &t2, Oracle *oracle) {
  if (t1.is_no_type()) return true;
  if (t2.is_no_type()) return false;
  if (t2.is_any()) return true;
  if (t1.is_any()) return false;
  if (t1.optional && !t2.optional) return false;
  // Bases (Optional-Width + Optional-Congruence collapse to base comparison).
  if (t1.kind == Ty::Kind::CharSeq) return t2.kind == Ty::Kind::CharSeq;
  if (t2.kind == Ty::Kind::CharSeq) return false;
  return name_subtype(t1.name, t2.name, oracle);
}

namespace {

// Name-level meet: deeper of a comparable pair; NoType marker ("") otherwise.
std::optional<std::string> name_meet(const std::string &a, const std::string &b,
                                     Oracle *oracle) {
  if (name_subtype(a, b, oracle)) return a;
  if (name_subtype(b, a, oracle)) return b;
  return std::nullopt;
}

// Name-level join: least common ancestor within one built-in tree; nullopt
// widens the result to Any.
std::optional<std::string> name_join(const std::string &a, const std::string &b,
                                     Oracle *oracle) {
  if (name_subtype(a, b, oracle)) return b;
  if (name_subtype(b, a, oracle)) return a;
  if (is_builtin_type_name(a) && is_builtin_type_name(b)) {
    std::string cur = a;
    for (;;) {
      auto it = parent_table().find(cur);
      if (it == parent_table().end()) break;
      cur = it->second;
      if (builtin_name_subtype(b, cur)) return cur;
    }
  }
  return std::nullopt;
}

}  // namespace

Ty meet(const Ty &t1, const Ty &t2, Oracle *oracle) {
  if (t1 == t2) return t1;
  if (t1.is_any()) return t2;
  if (t2.is_any()) return t1;
  if (t1.is_no_type() || t2.is_no_type()) return Ty::no_type();
  if (t1.optional && t2.optional) {
    Ty inner = meet(t1.stripped(), t2.stripped(), oracle);
    return inner.is_no_type() ? inner : inner.wrapped();
  }
  if (t1.optional) return meet(t1.stripped(), t2, oracle);
  if (t2.optional) return meet(t1, t2.stripped(), oracle);
  if (t1.kind == Ty::Kind::CharSeq) return t2;  // Semantic ⊓ CharSeq = Semantic.
  if (t2.kind == Ty::Kind::CharSeq) return t1;
  auto n = name_meet(t1.name, t2.name, oracle);
  return n ? Ty::semantic(*n) : Ty::no_type();
}

Ty join(const Ty &t1, const Ty &t2, Oracle *oracle) {
  if (t1 == t2) return t1;
  if (t1.is_any() || t2.is_any()) return Ty::any();
  if (t1.is_no_type()) return t2;
  if (t2.is_no_type()) return t1;
  if (t1.optional || t2.optional) {
    Ty inner = join(t1.stripped(), t2.stripped(), oracle);
    return inner.wrapped();  // Optional(Any) collapses to Any.
  }
  if (t1.kind == Ty::Kind::CharSeq && t2.kind == Ty::Kind::CharSeq)
    return Ty::char_seq();
  if (t1.kind == Ty::Kind::CharSeq || t2.kind == Ty::Kind::CharSeq)
    return Ty::any();  // Semantic ⊔ CharSeq = Any.
  auto n = name_join(t1.name, t2.name, oracle);
  return n ? Ty::semantic(*n) : Ty::any();
}

Ty type_of(const RegexPtr &r, Oracle *oracle) {
  switch (r->kind) {
    case Regex::Kind::Const: {
      if (oracle && !r->text.empty()) {
        auto t = oracle->semantic_type(r->text);
        if (t) return Ty::semantic(*t);
      }
      return Ty::char_seq();
    }
    case Regex::Kind::CharClass:
      return r->cc == CharClassKind::Num ? Ty::semantic("Number") : Ty::char_seq();
    case Regex::Kind::Empty:
      return Ty::no_type();
    case Regex::Kind::SemMatchQ:
    case Regex::Kind::SemMatchB:
      return Ty::semantic(r->text);
    case Regex::Kind::Not:
    case Regex::Kind::Concat:
      return Ty::any();
    case Regex::Kind::Opt: {
      Ty t = type_of(r->a, oracle);
      // Opt(∅) matches only the empty string.
      if (t.is_no_type()) return Ty::char_seq(true);
      return t.wrapped();
    }
    case Regex::Kind::Star:
    case Regex::Kind::Plus:
    case Regex::Kind::Repeat:
    case Regex::Kind::RepeatRange: {
      Ty t = type_of(r->a, oracle).stripped();
      if (t.kind == Ty::Kind::CharSeq || t.is_no_type()) return Ty::char_seq();
      return Ty::any();
    }
    case Regex::Kind::Union:
      return join(type_of(r->a, oracle), type_of(r->b, oracle), oracle);
    case Regex::Kind::Inter:
      return meet(type_of(r->a, oracle), type_of(r->b, oracle), oracle);
    case Regex::Kind::Hole:
      return r->hole_ty;
    case Regex::Kind::MetaHole:
      return Ty::any();
  }
  return Ty::any();
}

}  // namespace semrex
