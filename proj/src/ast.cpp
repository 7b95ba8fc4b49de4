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

#include "semrex/ast.hpp"

#include <algorithm>
#include <cassert>

namespace semrex {

PredPtr Pred::truth() {
  auto p = std::make_shared<Pred>();
  p->kind = Kind::True;
  return p;
}

PredPtr Pred::negate(PredPtr x) {
  auto p = std::make_shared<Pred>();
  p->kind = Kind::Not;
  p->a = std::move(x);
  return p;
}

PredPtr Pred::conj(PredPtr x, PredPtr y) {
  auto p = std::make_shared<Pred>();
  p->kind = Kind::And;
  p->a = std::move(x);
  p->b = std::move(y);
  return p;
}

PredPtr Pred::disj(PredPtr x, PredPtr y) {
  auto p = std::make_shared<Pred>();
  p->kind = Kind::Or;
  p->a = std::move(x);
  p->b = std::move(y);
  return p;
}

PredPtr Pred::cmp(Term t1, CmpOp op, Term t2) {
  auto p = std::make_shared<Pred>();
  p->kind = Kind::Cmp;
  p->t1 = std::move(t1);
  p->op = op;
  p->t2 = std::move(t2);
  return p;
}

PredPtr Pred::library(std::string name, std::vector<std::string> args) {
  auto p = std::make_shared<Pred>();
  p->kind = Kind::Lib;
  p->lib = std::move(name);
  p->args = std::move(args);
  return p;
}

bool pred_equal(const PredPtr &x, const PredPtr &y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case Pred::Kind::True:
      return true;
    case Pred::Kind::Not:
      return pred_equal(x->a, y->a);
    case Pred::Kind::And:
    case Pred::Kind::Or:
      return pred_equal(x->a, y->a) && pred_equal(x->b, y->b);
    case Pred::Kind::Cmp:
      return x->op == y->op && x->t1 == y->t1 && x->t2 == y->t2;
    case Pred::Kind::Lib:
      return x->lib == y->lib && x->args == y->args;
  }
  return false;
}

int pred_size(const PredPtr &p) {
  if (!p) return 0;
  switch (p->kind) {
    case Pred::Kind::True:
      return 1;
    case Pred::Kind::Not:
      return 1 + pred_size(p->a);
    case Pred::Kind::And:
    case Pred::Kind::Or:
      return 1 + pred_size(p->a) + pred_size(p->b);
    case Pred::Kind::Cmp:
      return 3;
    case Pred::Kind::Lib:
      return 1 + (int)p->args.size();
  }
  return 1;
}

namespace {
std::shared_ptr<Regex> mk(Regex::Kind k) {
  auto r = std::make_shared<Regex>();
  r->kind = k;
  return r;
}
}  // namespace

RegexPtr Regex::constant(std::string c) {
  auto r = mk(Kind::Const);
  r->text = std::move(c);
  return r;
}

RegexPtr Regex::char_class(CharClassKind cc) {
  auto r = mk(Kind::CharClass);
  r->cc = cc;
  return r;
}

RegexPtr Regex::empty() { return mk(Kind::Empty); }

RegexPtr Regex::sem_q(std::string type_name, Func f) {
  auto r = mk(Kind::SemMatchQ);
  r->text = std::move(type_name);
  r->func = f;
  return r;
}

RegexPtr Regex::sem_b(std::string type_name, Func f, PredPtr phi) {
  auto r = mk(Kind::SemMatchB);
  r->text = std::move(type_name);
  r->func = f;
  r->pred = std::move(phi);
  return r;
}

RegexPtr Regex::negate(RegexPtr x) {
  auto r = mk(Kind::Not);
  r->a = std::move(x);
  return r;
}

RegexPtr Regex::opt(RegexPtr x) {
  auto r = mk(Kind::Opt);
  r->a = std::move(x);
  return r;
}

RegexPtr Regex::star(RegexPtr x) {
  auto r = mk(Kind::Star);
  r->a = std::move(x);
  return r;
}

RegexPtr Regex::plus(RegexPtr x) {
  auto r = mk(Kind::Plus);
  r->a = std::move(x);
  return r;
}

RegexPtr Regex::repeat(RegexPtr x, int k1) {
  assert(k1 >= 1);
  auto r = mk(Kind::Repeat);
  r->a = std::move(x);
  r->k1 = k1;
  return r;
}

RegexPtr Regex::repeat_range(RegexPtr x, int k1, int k2) {
  assert(0 <= k1 && k1 <= k2);
  auto r = mk(Kind::RepeatRange);
  r->a = std::move(x);
  r->k1 = k1;
  r->k2 = k2;
  return r;
}

RegexPtr Regex::concat(RegexPtr x, RegexPtr y) {
  auto r = mk(Kind::Concat);
  r->a = std::move(x);
  r->b = std::move(y);
  return r;
}

RegexPtr Regex::union_(RegexPtr x, RegexPtr y) {
  auto r = mk(Kind::Union);
  r->a = std::move(x);
  r->b = std::move(y);
  return r;
}

RegexPtr Regex::inter(RegexPtr x, RegexPtr y) {
  auto r = mk(Kind::Inter);
  r->a = std::move(x);
  r->b = std::move(y);
  return r;
}

RegexPtr Regex::hole(Ty ty, int id) {
  auto r = mk(Kind::Hole);
  r->hole_ty = std::move(ty);
  r->hole_id = id;
  return r;
}

RegexPtr Regex::meta_hole(int id) {
  auto r = mk(Kind::MetaHole);
  r->hole_id = id;
  return r;
}

bool regex_equal(const RegexPtr &x, const RegexPtr &y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case Regex::Kind::Const:
      return x->text == y->text;
    case Regex::Kind::CharClass:
      return x->cc == y->cc;
    case Regex::Kind::Empty:
    case Regex::Kind::MetaHole:
      return true;
    case Regex::Kind::SemMatchQ:
      return x->text == y->text && x->func == y->func;
    case Regex::Kind::SemMatchB:
      return x->text == y->text && x->func == y->func && pred_equal(x->pred, y->pred);
    case Regex::Kind::Not:
    case Regex::Kind::Opt:
    case Regex::Kind::Star:
    case Regex::Kind::Plus:
      return regex_equal(x->a, y->a);
    case Regex::Kind::Repeat:
      return x->k1 == y->k1 && regex_equal(x->a, y->a);
    case Regex::Kind::RepeatRange:
      return x->k1 == y->k1 && x->k2 == y->k2 && regex_equal(x->a, y->a);
    case Regex::Kind::Concat:
    case Regex::Kind::Union:
    case Regex::Kind::Inter:
      return regex_equal(x->a, y->a) && regex_equal(x->b, y->b);
    case Regex::Kind::Hole:
      return x->hole_ty == y->hole_ty;
  }
  return false;
}

int node_count(const RegexPtr &r) {
  if (!r) return 0;
  int n = 1;
  if (r->kind == Regex::Kind::SemMatchB) n += pred_size(r->pred);
  n += node_count(r->a);
  n += node_count(r->b);
  return n;
}

int height(const RegexPtr &r) {
  if (!r) return 0;
  return 1 + std::max(height(r->a), height(r->b));
}

static void collect_holes_rec(const RegexPtr &r, std::vector<RegexPtr> &out) {
  if (!r) return;
  if (r->kind == Regex::Kind::Hole || r->kind == Regex::Kind::MetaHole) {
    out.push_back(r);
    return;
  }
  collect_holes_rec(r->a, out);
  collect_holes_rec(r->b, out);
}

std::vector<RegexPtr> collect_holes(const RegexPtr &r) {
  std::vector<RegexPtr> out;
  collect_holes_rec(r, out);
  return out;
}

bool is_concrete(const RegexPtr &r) { return collect_holes(r).empty(); }

RegexPtr substitute_hole(const RegexPtr &r, int hole_id, const RegexPtr &filler) {
  if (!r) return r;
  if ((r->kind == Regex::Kind::Hole || r->kind == Regex::Kind::MetaHole) &&
      r->hole_id == hole_id)
    return filler;
  RegexPtr na = substitute_hole(r->a, hole_id, filler);
  RegexPtr nb = substitute_hole(r->b, hole_id, filler);
  if (na == r->a && nb == r->b) return r;
  auto copy = std::make_shared<Regex>(*r);
  copy->a = na;
  copy->b = nb;
  return copy;
}

}  // namespace semrex
