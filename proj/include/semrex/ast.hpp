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

#ifndef SEMREX_AST_HPP
#define SEMREX_AST_HPP

#include <memory>
#include <string>
#include <vector>

#include "semrex/ty.hpp"

namespace semrex {

enum class CharClassKind { Any, Let, Num, Cap };

enum class FuncKind { Id, ToUpper, ToLower, Substring, Abbreviate };

// String transformation attached to a semantic match: one of
// id | toUpper | toLower | substring[k1,k2] | abbreviate[c].
struct Func {
  FuncKind kind = FuncKind::Id;
  int k1 = 0, k2 = 0;  // Substring bounds.
  char sep = '.';      // Abbreviate separator.

  static Func id() { return {}; }
  static Func to_upper() { return {FuncKind::ToUpper, 0, 0, '.'}; }
  static Func to_lower() { return {FuncKind::ToLower, 0, 0, '.'}; }
  static Func substring(int a, int b) { return {FuncKind::Substring, a, b, '.'}; }
  static Func abbreviate(char c) { return {FuncKind::Abbreviate, 0, 0, c}; }

  bool operator==(const Func &o) const {
    return kind == o.kind && k1 == o.k1 && k2 == o.k2 && sep == o.sep;
  }
};

// Predicate term: the matched value v, an attribute v.a, or a constant.
struct Term {
  enum class Kind { Var, Attr, Str, Num };
  Kind kind = Kind::Var;
  std::string text;  // Attr name or Str constant.
  double num = 0;

  static Term var() { return {}; }
  static Term attr(std::string a) { return {Kind::Attr, std::move(a), 0}; }
  static Term str(std::string s) { return {Kind::Str, std::move(s), 0}; }
  static Term number(double n) { return {Kind::Num, {}, n}; }

  bool operator==(const Term &o) const {
    return kind == o.kind && text == o.text && num == o.num;
  }
};

enum class CmpOp { Lt, Le, Gt, Ge, Eq, In };

struct Pred;
using PredPtr = std::shared_ptr<const Pred>;

struct Pred {
  enum class Kind { True, Not, And, Or, Cmp, Lib };

  Kind kind = Kind::True;
  PredPtr a, b;  // Not uses a; And/Or use both.
  Term t1, t2;   // Cmp.
  CmpOp op = CmpOp::Eq;
  std::string lib;                // Library predicate name (isYear, inRegion, ...).
  std::vector<std::string> args;  // Library predicate arguments, verbatim.

  static PredPtr truth();
  static PredPtr negate(PredPtr p);
  static PredPtr conj(PredPtr x, PredPtr y);
  static PredPtr disj(PredPtr x, PredPtr y);
  static PredPtr cmp(Term t1, CmpOp op, Term t2);
  static PredPtr library(std::string name, std::vector<std::string> args);
};

bool pred_equal(const PredPtr &x, const PredPtr &y);
int pred_size(const PredPtr &p);  // Leaf/operator count, used by ranking.

struct Regex;
using RegexPtr = std::shared_ptr<const Regex>;

// One AST covers concrete semantic regexes, sketches (Hole) and meta-sketches
// (MetaHole); concrete-only contexts assert hole-freedom instead of using a
// separate type.
struct Regex {
  enum class Kind {
    Const,
    CharClass,
    Empty,
    SemMatchQ,  // {v: f(tau)}         — any type name, no predicate.
    SemMatchB,  // {v: f(tau_b) | phi} — built-in type with predicate.
    Not,
    Opt,
    Star,
    Plus,
    Repeat,       // r{k1}
    RepeatRange,  // r{k1,k2}
    Concat,
    Union,
    Inter,
    Hole,      // {??: ty}
    MetaHole,  // {??}
  };

  Kind kind = Kind::Empty;
  std::string text;  // Const text or SemMatch type name.
  CharClassKind cc = CharClassKind::Any;
  Func func;
  PredPtr pred;  // SemMatchB only.
  RegexPtr a, b;
  int k1 = 0, k2 = 0;  // Repeat/RepeatRange.
  Ty hole_ty;          // Hole only.
  int hole_id = -1;    // Hole/MetaHole; unique within one sketch.

  static RegexPtr constant(std::string c);
  static RegexPtr char_class(CharClassKind cc);
  static RegexPtr empty();
  static RegexPtr sem_q(std::string type_name, Func f = Func::id());
  static RegexPtr sem_b(std::string type_name, Func f, PredPtr phi);
  static RegexPtr negate(RegexPtr r);
  static RegexPtr opt(RegexPtr r);
  static RegexPtr star(RegexPtr r);
  static RegexPtr plus(RegexPtr r);
  static RegexPtr repeat(RegexPtr r, int k1);
  static RegexPtr repeat_range(RegexPtr r, int k1, int k2);
  static RegexPtr concat(RegexPtr a, RegexPtr b);
  static RegexPtr union_(RegexPtr a, RegexPtr b);
  static RegexPtr inter(RegexPtr a, RegexPtr b);
  static RegexPtr hole(Ty ty, int id);
  static RegexPtr meta_hole(int id);
};

bool regex_equal(const RegexPtr &x, const RegexPtr &y);  // Ignores hole ids.

int node_count(const RegexPtr &r);  // Includes predicate size.
int height(const RegexPtr &r);

// Holes (and meta-holes) in left-to-right order.
std::vector<RegexPtr> collect_holes(const RegexPtr &r);
bool is_concrete(const RegexPtr &r);

// Structural substitution of the hole with the given id.
RegexPtr substitute_hole(const RegexPtr &r, int hole_id, const RegexPtr &filler);

}  // namespace semrex

#endif
