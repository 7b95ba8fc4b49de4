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

#include "semrex/engine.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "semrex/typesys.hpp"

namespace semrex {

namespace {

const char *kMonthNames[] = {"January",   "February", "March",    "April",
                             "May",       "June",     "July",     "August",
                             "September", "October",  "November", "December"};

void index_nodes(const Regex *r, std::unordered_map<const Regex *, int> &idx) {
  if (!r || idx.count(r)) return;
  int id = (int)idx.size();
  idx[r] = id;
  index_nodes(r->a.get(), idx);
  index_nodes(r->b.get(), idx);
}

bool char_class_match(CharClassKind cc, char c) {
  switch (cc) {
    case CharClassKind::Any:
      return true;
    case CharClassKind::Let:
      return std::isalpha((unsigned char)c);
    case CharClassKind::Num:
      return std::isdigit((unsigned char)c);
    case CharClassKind::Cap:
      return std::isupper((unsigned char)c);
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// Matcher

Matcher::Matcher(RegexPtr root, Oracle *oracle, bool use_memo)
    : root_(std::move(root)), oracle_(oracle), use_memo_(use_memo) {
  index_nodes(root_.get(), index_);
  n_nodes_ = (int)index_.size();
}

void Matcher::bind(const std::string &s) {
  s_ = &s;
  len_ = (int)s.size();
  if (use_memo_) memo_.assign((size_t)n_nodes_ * (len_ + 1) * (len_ + 1), 0);
}

bool Matcher::full_match(const std::string &s) {
  bind(s);
  return match(root_.get(), 0, len_);
}

bool Matcher::match(const Regex *r, int b, int e) {
  if (!use_memo_) return compute(r, b, e);
  size_t key =
      (size_t)index_.at(r) * (len_ + 1) * (len_ + 1) + (size_t)b * (len_ + 1) + e;
  int8_t &slot = memo_[key];
  if (slot) return slot == 1;
  bool ok = compute(r, b, e);
  slot = ok ? 1 : 2;
  return ok;
}

bool Matcher::rep_match(const Regex *r, int b, int e, int k_min, int k_max) {
  if (b == e) return k_min <= 0 || match(r, b, b);
  if (k_max == 0) return false;
  for (int m = b + 1; m <= e; m++)
    if (match(r, b, m) &&
        rep_match(r, m, e, std::max(0, k_min - 1), k_max < 0 ? -1 : k_max - 1))
      return true;
  return false;
}

bool Matcher::compute(const Regex *r, int b, int e) {
  const std::string &s = *s_;
  switch (r->kind) {
    case Regex::Kind::Const:
      return (int)r->text.size() == e - b && s.compare(b, e - b, r->text) == 0;
    case Regex::Kind::CharClass:
      return e - b == 1 && char_class_match(r->cc, s[b]);
    case Regex::Kind::Empty:
      return false;
    case Regex::Kind::SemMatchQ: {
      if (!oracle_) throw OracleUnavailable("semantic match requires an oracle");
      return inverse_check(*oracle_, r->func, s.substr(b, e - b), r->text);
    }
    case Regex::Kind::SemMatchB: {
      if (!oracle_) throw OracleUnavailable("semantic match requires an oracle");
      for (auto &src : preimages(*oracle_, r->func, s.substr(b, e - b), r->text)) {
        std::optional<CastValue> o = cast_builtin(src, r->text);
        if (!o) {
          CastValue cv;
          cv.type = r->text;
          cv.entity = src;
          o = cv;
        }
        if (eval_pred(r->pred, *o, oracle_)) return true;
      }
      return false;
    }
    case Regex::Kind::Not:
      return !match(r->a.get(), b, e);
    case Regex::Kind::Opt:
      return b == e || match(r->a.get(), b, e);
    case Regex::Kind::Star:
      return rep_match(r->a.get(), b, e, 0, -1);
    case Regex::Kind::Plus:
      return rep_match(r->a.get(), b, e, 1, -1);
    case Regex::Kind::Repeat:
      return rep_match(r->a.get(), b, e, r->k1, r->k1);
    case Regex::Kind::RepeatRange:
      return rep_match(r->a.get(), b, e, r->k1, r->k2);
    case Regex::Kind::Concat:
      for (int m = b; m <= e; m++)
        if (match(r->a.get(), b, m) && match(r->b.get(), m, e)) return true;
      return false;
    case Regex::Kind::Union:
      return match(r->a.get(), b, e) || match(r->b.get(), b, e);
    case Regex::Kind::Inter:
      return match(r->a.get(), b, e) && match(r->b.get(), b, e);
    case Regex::Kind::Hole:
    case Regex::Kind::MetaHole:
      throw std::logic_error("cannot match against a sketch hole");
  }
  return false;
}

bool matches(const RegexPtr &r, const std::string &s, Oracle *oracle) {
  Matcher m(r, oracle);
  return m.full_match(s);
}

// ---------------------------------------------------------------------------
// Predicates

namespace {

struct TermVal {
  bool is_str = false;
  double num = 0;
  std::string str;
};

bool date_family(const std::string &t) {
  return t == "Date" || t == "Year" || t == "Month" || t == "Day";
}
bool time_family(const std::string &t) {
  return t == "Time" || t == "Hour" || t == "Minute" || t == "Second";
}

// Attribute table: Date -> {year, month, day}, Time -> {hour, minute, second},
// and each component type carries its own attribute. Referencing anything else
// is a well-formedness bug. A valid attribute with no value (e.g. v.day on
// "May 2023") yields nullopt and the comparison is simply false.
std::optional<double> attr_value(const CastValue &o, const std::string &name) {
  auto val = [](const std::optional<int> &v) -> std::optional<double> {
    if (v) return (double)*v;
    return std::nullopt;
  };
  if (name == "year" || name == "month" || name == "day") {
    bool ok = date_family(o.type) &&
              (o.type == "Date" || o.type == (char)std::toupper(name[0]) + name.substr(1));
    if (!ok)
      throw AttributeError("attribute ." + name + " undefined for type " + o.type);
    return val(name == "year" ? o.year : name == "month" ? o.month : o.day);
  }
  if (name == "hour" || name == "minute" || name == "second") {
    bool ok = time_family(o.type) &&
              (o.type == "Time" || o.type == (char)std::toupper(name[0]) + name.substr(1));
    if (!ok)
      throw AttributeError("attribute ." + name + " undefined for type " + o.type);
    return val(name == "hour" ? o.hour : name == "minute" ? o.minute : o.second);
  }
  throw AttributeError("unknown attribute ." + name);
}

std::optional<TermVal> eval_term(const Term &t, const CastValue &o) {
  TermVal v;
  switch (t.kind) {
    case Term::Kind::Var:
      if (o.has_num) {
        v.num = o.num;
      } else {
        v.is_str = true;
        v.str = o.entity;
      }
      return v;
    case Term::Kind::Attr: {
      auto a = attr_value(o, t.text);
      if (!a) return std::nullopt;
      v.num = *a;
      return v;
    }
    case Term::Kind::Num:
      v.num = t.num;
      return v;
    case Term::Kind::Str:
      v.is_str = true;
      v.str = t.text;
      return v;
  }
  return std::nullopt;
}

bool geo_any(Oracle *oracle, const std::string &entity, const std::string &arg) {
  if (!oracle) throw OracleUnavailable("geo predicate requires an oracle");
  return oracle->in_geo(entity, "region", arg) ||
         oracle->in_geo(entity, "country", arg) ||
         oracle->in_geo(entity, "state", arg);
}

bool eval_cmp(const Pred &p, const CastValue &o, Oracle *oracle) {
  auto lhs = eval_term(p.t1, o);
  auto rhs = eval_term(p.t2, o);
  if (!lhs || !rhs) return false;
  if (p.op == CmpOp::In) {
    if (!lhs->is_str || !rhs->is_str) return false;
    return geo_any(oracle, lhs->str, rhs->str);
  }
  if (lhs->is_str != rhs->is_str) return false;
  if (lhs->is_str) {
    if (p.op == CmpOp::Eq) return lhs->str == rhs->str;
    return false;  // Ordered comparisons are numeric-only.
  }
  switch (p.op) {
    case CmpOp::Lt:
      return lhs->num < rhs->num;
    case CmpOp::Le:
      return lhs->num <= rhs->num;
    case CmpOp::Gt:
      return lhs->num > rhs->num;
    case CmpOp::Ge:
      return lhs->num >= rhs->num;
    case CmpOp::Eq:
      return lhs->num == rhs->num;
    case CmpOp::In:
      break;
  }
  return false;
}

int lib_int_arg(const Pred &p, size_t i) {
  if (i >= p.args.size())
    throw AttributeError("library predicate " + p.lib + " missing argument");
  return std::stoi(p.args[i]);
}

bool hour_in(const CastValue &o, int lo, int hi) {  // [lo, hi)
  if (!o.hour) return false;
  return *o.hour >= lo && *o.hour < hi;
}

bool eval_lib(const Pred &p, const CastValue &o, Oracle *oracle) {
  const std::string &n = p.lib;
  if (n == "isYear") return o.year && !o.month && !o.day;
  if (n == "isMonth") return o.month && !o.year && !o.day;
  if (n == "isDate") return o.year && o.month && o.day;
  if (n == "btwHour")
    return o.hour && *o.hour >= lib_int_arg(p, 0) && *o.hour <= lib_int_arg(p, 1);
  if (n == "btwMin")
    return o.minute && *o.minute >= lib_int_arg(p, 0) &&
           *o.minute <= lib_int_arg(p, 1);
  if (n == "btwSec")
    return o.second && *o.second >= lib_int_arg(p, 0) &&
           *o.second <= lib_int_arg(p, 1);
  if (n == "isMorning") return hour_in(o, 5, 12);
  if (n == "isAfternoon") return hour_in(o, 12, 18);
  if (n == "isEvening") return hour_in(o, 18, 24);
  if (n == "inRegion" || n == "inCountry" || n == "inState") {
    if (!oracle) throw OracleUnavailable("geo predicate requires an oracle");
    if (p.args.empty())
      throw AttributeError("library predicate " + n + " missing argument");
    std::string kind = n == "inRegion" ? "region" : n == "inCountry" ? "country" : "state";
    return oracle->in_geo(o.entity, kind, p.args[0]);
  }
  throw AttributeError("unknown library predicate " + n);
}

}  // namespace

bool eval_pred(const PredPtr &phi, const CastValue &o, Oracle *oracle) {
  if (!phi) return true;
  switch (phi->kind) {
    case Pred::Kind::True:
      return true;
    case Pred::Kind::Not:
      return !eval_pred(phi->a, o, oracle);
    case Pred::Kind::And:
      return eval_pred(phi->a, o, oracle) && eval_pred(phi->b, o, oracle);
    case Pred::Kind::Or:
      return eval_pred(phi->a, o, oracle) || eval_pred(phi->b, o, oracle);
    case Pred::Kind::Cmp:
      return eval_cmp(*phi, o, oracle);
    case Pred::Kind::Lib:
      return eval_lib(*phi, o, oracle);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Inverse images of string functions

std::vector<std::string> preimages(Oracle &oracle, const Func &f,
                                   const std::string &s, const std::string &tau) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  auto push = [&](const std::string &cand) {
    if (seen.insert(cand).second) out.push_back(cand);
  };
  if (f.kind == FuncKind::Id) {
    if (!s.empty() && oracle.has_type(s, tau)) push(s);
    return out;
  }
  auto consider = [&](const std::string &cand) {
    try {
      if (apply_func(f, cand) == s) push(cand);
    } catch (const std::out_of_range &) {
      // Substring bounds exceed the candidate: not a preimage.
    }
  };
  for (auto &w : oracle.extent(tau)) consider(w);
  // Finite built-in numeric domains below tau.
  struct Dom {
    const char *name;
    int lo, hi;
  };
  static const Dom kDoms[] = {{"Year", 0, 9999}, {"Month", 1, 12},
                              {"Day", 1, 31},    {"Hour", 0, 23},
                              {"Minute", 0, 59}, {"Second", 0, 59}};
  for (auto &d : kDoms)
    if (tau == d.name || builtin_name_subtype(d.name, tau))
      for (int v = d.lo; v <= d.hi; v++) consider(std::to_string(v));
  if (tau == "Month" || builtin_name_subtype("Month", tau))
    for (auto *m : kMonthNames) consider(m);
  if (!out.empty() || s.empty()) return out;

  // No enumerable preimage found: conservative per-function checks that only
  // consult the oracle on s itself (the live backend cannot enumerate).
  if (oracle.extent(tau).empty() && !is_syntactic_builtin(tau)) {
    auto upper = [&] {
      std::string u = s;
      for (char &c : u) c = (char)std::toupper((unsigned char)c);
      return u;
    };
    auto lower = [&] {
      std::string l = s;
      for (char &c : l) c = (char)std::tolower((unsigned char)c);
      return l;
    };
    switch (f.kind) {
      case FuncKind::ToUpper:
        if (s == upper() && oracle.has_type(s, tau)) push(s);
        break;
      case FuncKind::ToLower:
        if (s == lower() && oracle.has_type(s, tau)) push(s);
        break;
      case FuncKind::Abbreviate: {
        // Shape (X c)+ with single-letter components.
        bool ok = !s.empty() && s.size() % 2 == 0;
        for (size_t i = 0; ok && i < s.size(); i += 2)
          ok = std::isalnum((unsigned char)s[i]) && s[i + 1] == f.sep;
        if (ok && oracle.has_type(s, tau)) push(s);
        break;
      }
      case FuncKind::Substring:
        if (oracle.has_type(s, tau)) push(s);
        break;
      default:
        break;
    }
  }
  return out;
}

bool inverse_check(Oracle &oracle, const Func &f, const std::string &s,
                   const std::string &tau) {
  return !preimages(oracle, f, s, tau).empty();
}

// ---------------------------------------------------------------------------
// Over-approximation

namespace {

RegexPtr widen(const RegexPtr &r, bool even) {
  switch (r->kind) {
    case Regex::Kind::Hole:
    case Regex::Kind::MetaHole:
    case Regex::Kind::SemMatchQ:
    case Regex::Kind::SemMatchB:
      return even ? Regex::star(Regex::char_class(CharClassKind::Any))
                  : Regex::empty();
    case Regex::Kind::Const:
    case Regex::Kind::CharClass:
    case Regex::Kind::Empty:
      return r;
    case Regex::Kind::Not:
      return Regex::negate(widen(r->a, !even));
    case Regex::Kind::Opt:
      return Regex::opt(widen(r->a, even));
    case Regex::Kind::Star:
      return Regex::star(widen(r->a, even));
    case Regex::Kind::Plus:
      return Regex::plus(widen(r->a, even));
    case Regex::Kind::Repeat:
      return Regex::repeat(widen(r->a, even), r->k1);
    case Regex::Kind::RepeatRange:
      return Regex::repeat_range(widen(r->a, even), r->k1, r->k2);
    case Regex::Kind::Concat:
      return Regex::concat(widen(r->a, even), widen(r->b, even));
    case Regex::Kind::Union:
      return Regex::union_(widen(r->a, even), widen(r->b, even));
    case Regex::Kind::Inter:
      return Regex::inter(widen(r->a, even), widen(r->b, even));
  }
  return r;
}

}  // namespace

RegexPtr overapprox(const RegexPtr &x) { return widen(x, true); }

RegexPtr widen_keep_holes(const RegexPtr &r) {
  if (r->kind == Regex::Kind::Hole || r->kind == Regex::Kind::MetaHole) return r;
  if (is_concrete(r)) return overapprox(r);
  switch (r->kind) {
    case Regex::Kind::Opt:
      return Regex::opt(widen_keep_holes(r->a));
    case Regex::Kind::Star:
      return Regex::star(widen_keep_holes(r->a));
    case Regex::Kind::Plus:
      return Regex::plus(widen_keep_holes(r->a));
    case Regex::Kind::Repeat:
      return Regex::repeat(widen_keep_holes(r->a), r->k1);
    case Regex::Kind::RepeatRange:
      return Regex::repeat_range(widen_keep_holes(r->a), r->k1, r->k2);
    case Regex::Kind::Concat:
      return Regex::concat(widen_keep_holes(r->a), widen_keep_holes(r->b));
    case Regex::Kind::Union:
      return Regex::union_(widen_keep_holes(r->a), widen_keep_holes(r->b));
    case Regex::Kind::Inter:
      return Regex::inter(widen_keep_holes(r->a), widen_keep_holes(r->b));
    default:
      return overapprox(r);
  }
}

// ---------------------------------------------------------------------------
// Split enumeration

namespace {

void flatten_concat(const RegexPtr &r, std::vector<RegexPtr> &out) {
  if (r->kind == Regex::Kind::Concat) {
    flatten_concat(r->a, out);
    flatten_concat(r->b, out);
  } else {
    out.push_back(r);
  }
}

}  // namespace

std::vector<std::vector<std::string>> match_splits(const RegexPtr &r_star,
                                                   const std::string &e,
                                                   Oracle *oracle, size_t cap) {
  std::vector<RegexPtr> children;
  flatten_concat(r_star, children);
  Matcher m(r_star, oracle);
  m.bind(e);

  std::vector<std::vector<std::string>> out;
  std::vector<std::string> cur(children.size());
  std::function<void(size_t, int)> go = [&](size_t idx, int pos) {
    if (out.size() >= cap) return;
    if (idx + 1 == children.size()) {
      if (m.match(children[idx].get(), pos, (int)e.size())) {
        cur[idx] = e.substr(pos, e.size() - pos);
        out.push_back(cur);
      }
      return;
    }
    for (int mpos = pos; mpos <= (int)e.size(); mpos++) {
      if (!m.match(children[idx].get(), pos, mpos)) continue;
      cur[idx] = e.substr(pos, mpos - pos);
      go(idx + 1, mpos);
      if (out.size() >= cap) return;
    }
  };
  go(0, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Hole assignments

namespace {

bool contains_hole(const Regex *r, std::unordered_map<const Regex *, bool> &memo) {
  if (!r) return false;
  auto it = memo.find(r);
  if (it != memo.end()) return it->second;
  bool h = r->kind == Regex::Kind::Hole || r->kind == Regex::Kind::MetaHole ||
           contains_hole(r->a.get(), memo) || contains_hole(r->b.get(), memo);
  memo[r] = h;
  return h;
}

void hole_ids(const RegexPtr &r, std::vector<int> &out) {
  for (auto &h : collect_holes(r)) out.push_back(h->hole_id);
}

HoleAssignment merged(const HoleAssignment &x, const HoleAssignment &y) {
  HoleAssignment out = x;
  for (auto &[id, pieces] : y.pieces) {
    auto &dst = out.pieces[id];
    dst.insert(dst.end(), pieces.begin(), pieces.end());
  }
  return out;
}

HoleAssignment absent_for(const RegexPtr &r) {
  HoleAssignment a;
  std::vector<int> ids;
  hole_ids(r, ids);
  for (int id : ids) a.pieces[id];  // Keyed with an empty list.
  return a;
}

struct AssignCtx {
  const std::string &e;
  Matcher &matcher;
  const std::function<bool(const Regex &, const std::string &)> &admit;
  std::unordered_map<const Regex *, bool> hole_memo;
  size_t cap;
};

using AssignList = std::vector<HoleAssignment>;

AssignList assign(AssignCtx &ctx, const RegexPtr &r, int b, int e);

AssignList assign_concat(AssignCtx &ctx, const std::vector<RegexPtr> &children,
                         size_t idx, int b, int e) {
  if (idx + 1 == children.size()) return assign(ctx, children[idx], b, e);
  AssignList out;
  for (int m = b; m <= e; m++) {
    AssignList left = assign(ctx, children[idx], b, m);
    if (left.empty()) continue;
    AssignList rest = assign_concat(ctx, children, idx + 1, m, e);
    for (auto &x : left)
      for (auto &y : rest) {
        out.push_back(merged(x, y));
        if (out.size() >= ctx.cap) return out;
      }
  }
  return out;
}

// k_min..k_max iterations of r over [b,e); k_max < 0 means unbounded.
AssignList assign_rep(AssignCtx &ctx, const RegexPtr &r, int b, int e, int k_min,
                      int k_max) {
  if (b == e) {
    if (k_min <= 0) return {absent_for(r)};
    return assign(ctx, r, b, b);  // One representative empty iteration.
  }
  if (k_max == 0) return {};
  AssignList out;
  for (int m = b + 1; m <= e; m++) {
    AssignList head = assign(ctx, r, b, m);
    if (head.empty()) continue;
    AssignList tail = assign_rep(ctx, r, m, e, std::max(0, k_min - 1),
                                 k_max < 0 ? -1 : k_max - 1);
    for (auto &x : head)
      for (auto &y : tail) {
        out.push_back(merged(x, y));
        if (out.size() >= ctx.cap) return out;
      }
  }
  return out;
}

AssignList assign(AssignCtx &ctx, const RegexPtr &r, int b, int e) {
  if (!contains_hole(r.get(), ctx.hole_memo))
    return ctx.matcher.match(r.get(), b, e) ? AssignList{HoleAssignment{}}
                                            : AssignList{};
  switch (r->kind) {
    case Regex::Kind::Hole:
    case Regex::Kind::MetaHole: {
      std::string piece = ctx.e.substr(b, e - b);
      if (ctx.admit && !ctx.admit(*r, piece)) return {};
      HoleAssignment a;
      a.pieces[r->hole_id] = {piece};
      return {a};
    }
    case Regex::Kind::Concat: {
      std::vector<RegexPtr> children;
      flatten_concat(r, children);
      return assign_concat(ctx, children, 0, b, e);
    }
    case Regex::Kind::Union: {
      AssignList out;
      for (auto &x : assign(ctx, r->a, b, e))
        out.push_back(merged(x, absent_for(r->b)));
      for (auto &x : assign(ctx, r->b, b, e))
        out.push_back(merged(absent_for(r->a), x));
      if (out.size() > ctx.cap) out.resize(ctx.cap);
      return out;
    }
    case Regex::Kind::Inter: {
      AssignList out;
      for (auto &x : assign(ctx, r->a, b, e))
        for (auto &y : assign(ctx, r->b, b, e)) {
          out.push_back(merged(x, y));
          if (out.size() >= ctx.cap) return out;
        }
      return out;
    }
    case Regex::Kind::Opt: {
      AssignList out;
      if (b == e) out.push_back(absent_for(r->a));
      for (auto &x : assign(ctx, r->a, b, e)) out.push_back(x);
      if (out.size() > ctx.cap) out.resize(ctx.cap);
      return out;
    }
    case Regex::Kind::Star:
      return assign_rep(ctx, r->a, b, e, 0, -1);
    case Regex::Kind::Plus:
      return assign_rep(ctx, r->a, b, e, 1, -1);
    case Regex::Kind::Repeat:
      return assign_rep(ctx, r->a, b, e, r->k1, r->k1);
    case Regex::Kind::RepeatRange:
      return assign_rep(ctx, r->a, b, e, r->k1, r->k2);
    case Regex::Kind::Not:
      // No routing through complements: a hole under negation cannot receive
      // a well-defined piece, so such derivations are dropped.
      return {};
    default:
      return {};
  }
}

}  // namespace

std::vector<HoleAssignment> enumerate_assignments(
    const RegexPtr &sketch, const std::string &e, Oracle *oracle,
    const std::function<bool(const Regex &, const std::string &)> &admit,
    size_t cap) {
  Matcher matcher(sketch, oracle);
  matcher.bind(e);  // Holes are never matched directly.
  AssignCtx ctx{e, matcher, admit, {}, cap};
  AssignList raw = assign(ctx, sketch, 0, (int)e.size());

  // Normalize: every hole of the sketch keyed, deduplicated, order-preserving.
  std::vector<int> all_ids;
  hole_ids(sketch, all_ids);
  std::vector<HoleAssignment> out;
  std::set<HoleAssignment> seen;
  for (auto &a : raw) {
    HoleAssignment n = a;
    for (int id : all_ids) n.pieces.try_emplace(id);
    if (seen.insert(n).second) out.push_back(n);
  }
  return out;
}

}  // namespace semrex
