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

#include "semrex/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "semrex/cast.hpp"
#include "semrex/typesys.hpp"

namespace semrex {

namespace {

constexpr size_t kMaxConstants = 96;
constexpr size_t kMaxTexts = 64;

bool is_integer(double c) { return c == std::floor(c); }

// Every numeric value readable as a digit substring of s.
void harvest_digit_runs(const std::string &s, std::set<double> &out) {
  size_t i = 0;
  while (i < s.size()) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) j++;
      for (size_t a = i; a < j; a++)
        for (size_t b = a + 1; b <= j && b - a <= 9; b++)
          out.insert(static_cast<double>(std::stoll(s.substr(a, b - a))));
      i = j;
    } else {
      i++;
    }
  }
}

bool is_numeric_builtin(const std::string &tau) {
  static const std::set<std::string> kNumeric = {
      "Number", "Integer", "Float",  "Year",   "Month",
      "Day",    "Hour",    "Minute", "Second",
  };
  return kNumeric.count(tau) > 0;
}

bool is_geo_builtin(const std::string &tau) {
  return tau == "Country" || tau == "City" || tau == "Place" || tau == "Location";
}

const std::vector<CmpOp> &cmp_ops() {
  static const std::vector<CmpOp> ops = {CmpOp::Lt, CmpOp::Le, CmpOp::Gt,
                                         CmpOp::Ge, CmpOp::Eq};
  return ops;
}

// Every predicate the table attaches to the built-in type tau.
std::vector<PredPtr> preds_for(const std::string &tau, const GrammarSlice &g) {
  std::vector<PredPtr> out;
  if (is_numeric_builtin(tau)) {
    for (CmpOp op : cmp_ops())
      for (double c : g.constants)
        out.push_back(Pred::cmp(Term::var(), op, Term::number(c)));
  } else if (tau == "Date") {
    for (const char *attr : {"year", "month", "day"})
      for (CmpOp op : cmp_ops())
        for (double c : g.constants)
          out.push_back(Pred::cmp(Term::attr(attr), op, Term::number(c)));
    for (const char *lib : {"isYear", "isMonth", "isDate"})
      out.push_back(Pred::library(lib, {}));
  } else if (tau == "Time") {
    for (const char *attr : {"hour", "minute", "second"})
      for (CmpOp op : cmp_ops())
        for (double c : g.constants)
          out.push_back(Pred::cmp(Term::attr(attr), op, Term::number(c)));
    for (const char *lib : {"isMorning", "isAfternoon", "isEvening"})
      out.push_back(Pred::library(lib, {}));
    struct BtwSpec {
      const char *name;
      int lo, hi;
    };
    for (const BtwSpec &bs : {BtwSpec{"btwHour", 0, 23}, BtwSpec{"btwMin", 0, 59},
                              BtwSpec{"btwSec", 0, 59}})
      for (double a : g.constants) {
        if (!is_integer(a) || a < bs.lo || a > bs.hi) continue;
        for (double b : g.constants) {
          if (!is_integer(b) || b <= a || b > bs.hi) continue;
          out.push_back(Pred::library(
              bs.name, {std::to_string(static_cast<long long>(a)),
                        std::to_string(static_cast<long long>(b))}));
        }
      }
  } else if (is_geo_builtin(tau)) {
    for (auto &r : g.regions) out.push_back(Pred::library("inRegion", {r}));
    if (tau == "City")
      for (auto &c : g.countries) out.push_back(Pred::library("inCountry", {c}));
  }
  return out;
}

const std::vector<Func> &entity_funcs() {
  static const std::vector<Func> fs = {Func::id(), Func::to_upper(),
                                       Func::to_lower(), Func::abbreviate('.')};
  return fs;
}

}  // namespace

RegexPtr contain(const std::string &c) {
  auto any = Regex::star(Regex::char_class(CharClassKind::Any));
  return Regex::concat(Regex::concat(any, Regex::constant(c)), any);
}

GrammarSlice make_slice(Oracle &oracle, const Ty &goal,
                        const std::vector<std::string> &positives,
                        const std::vector<std::string> &relevant,
                        bool type_pruning) {
  GrammarSlice g;

  const Ty base = goal.stripped();
  if (!(type_pruning && base.kind == Ty::Kind::CharSeq)) {
    for (auto &name : oracle.known_types()) {
      if (name.find(' ') != std::string::npos) continue;  // Not a surface name.
      if (type_pruning && base.is_semantic() &&
          !name_subtype(name, base.name, &oracle))
        continue;
      g.sem_types.push_back(name);
    }
    std::sort(g.sem_types.begin(), g.sem_types.end());
    g.sem_types.erase(std::unique(g.sem_types.begin(), g.sem_types.end()),
                      g.sem_types.end());
  }

  std::set<double> consts = {0, 100, 1000, 1900, 2000};
  for (auto &s : positives) harvest_digit_runs(s, consts);
  for (auto &s : relevant) harvest_digit_runs(s, consts);
  g.constants.assign(consts.begin(), consts.end());
  if (g.constants.size() > kMaxConstants) g.constants.resize(kMaxConstants);

  std::set<std::string> texts;
  const std::set<std::string> distinct(positives.begin(), positives.end());
  for (auto &p : positives) {
    texts.insert(p);
    size_t i = 0;
    while (i < p.size()) {
      if (p[i] == ' ') {
        i++;
        continue;
      }
      size_t j = p.find(' ', i);
      if (j == std::string::npos) j = p.size();
      texts.insert(p.substr(i, j - i));
      i = j;
    }
  }
  // When the pieces differ, literals equal to a whole piece can only memorize
  // individual examples (e.g. as iterated or alternated literals), so they
  // are dropped; a hole whose pieces all agree keeps its literal.
  if (distinct.size() > 1)
    for (auto &p : distinct) texts.erase(p);
  g.texts.assign(texts.begin(), texts.end());
  if (g.texts.size() > kMaxTexts) g.texts.resize(kMaxTexts);

  for (auto &t : g.texts) {
    if (t.empty()) continue;
    bool common = !positives.empty();
    for (auto &p : positives)
      if (p.find(t) == std::string::npos) {
        common = false;
        break;
      }
    if (common) g.contain_texts.push_back(t);
  }

  g.regions = {"Africa", "Asia", "Europe", "NorthAmerica", "Oceania",
               "SouthAmerica"};
  try {
    g.countries = oracle.extent("Country");
  } catch (const std::exception &) {
    g.countries.clear();
  }

  return g;
}

std::vector<RegexPtr> leaf_productions(const GrammarSlice &g) {
  std::vector<RegexPtr> out;

  for (auto &tau : g.sem_types) {
    const bool entity = !is_syntactic_builtin(tau);
    if (entity) {
      for (auto &f : entity_funcs()) out.push_back(Regex::sem_q(tau, f));
    } else {
      out.push_back(Regex::sem_q(tau));
    }
    if (!is_builtin_type_name(tau)) continue;
    for (auto &phi : preds_for(tau, g)) {
      if (entity) {
        for (auto &f : entity_funcs()) out.push_back(Regex::sem_b(tau, f, phi));
      } else {
        out.push_back(Regex::sem_b(tau, Func::id(), phi));
      }
    }
  }

  for (auto &c : g.texts) out.push_back(Regex::constant(c));

  for (CharClassKind cc : {CharClassKind::Any, CharClassKind::Let,
                           CharClassKind::Num, CharClassKind::Cap})
    out.push_back(Regex::char_class(cc));

  for (auto &c : g.contain_texts) out.push_back(contain(c));

  return out;
}

bool valid_union_operand(const RegexPtr &r) {
  return r->kind != Regex::Kind::Const;
}

}  // namespace semrex
