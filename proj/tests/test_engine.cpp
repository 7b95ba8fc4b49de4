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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "helpers.hpp"
#include "semrex/engine.hpp"
#include "semrex/syntax.hpp"

using namespace semrex;

namespace {

using StrSet = std::set<std::string>;

StrSet all_strings(const std::string &alphabet, int max_len) {
  StrSet out = {""};
  StrSet frontier = {""};
  for (int l = 0; l < max_len; l++) {
    StrSet next;
    for (auto &s : frontier)
      for (char c : alphabet) next.insert(s + c);
    out.insert(next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

StrSet concat_sets(const StrSet &a, const StrSet &b, const StrSet &u) {
  StrSet out;
  for (auto &x : a)
    for (auto &y : b) {
      std::string s = x + y;
      if (u.count(s)) out.insert(s);
    }
  return out;
}

// Independent reference: the denotation of a (semantic-free) regex as an
// explicit string set restricted to universe u, built by set operations.
StrSet lang(const RegexPtr &r, const StrSet &u) {
  switch (r->kind) {
    case Regex::Kind::Const:
      return u.count(r->text) ? StrSet{r->text} : StrSet{};
    case Regex::Kind::CharClass: {
      StrSet out;
      for (auto &s : u) {
        if (s.size() != 1) continue;
        char c = s[0];
        bool ok = r->cc == CharClassKind::Any ||
                  (r->cc == CharClassKind::Let && std::isalpha((unsigned char)c)) ||
                  (r->cc == CharClassKind::Num && std::isdigit((unsigned char)c)) ||
                  (r->cc == CharClassKind::Cap && std::isupper((unsigned char)c));
        if (ok) out.insert(s);
      }
      return out;
    }
    case Regex::Kind::Empty:
      return {};
    case Regex::Kind::Not: {
      StrSet inner = lang(r->a, u), out;
      for (auto &s : u)
        if (!inner.count(s)) out.insert(s);
      return out;
    }
    case Regex::Kind::Opt: {
      StrSet out = lang(r->a, u);
      out.insert("");
      return out;
    }
    case Regex::Kind::Star: {
      StrSet l = lang(r->a, u);
      StrSet out = {""};
      for (;;) {
        StrSet next = concat_sets(out, l, u);
        size_t before = out.size();
        out.insert(next.begin(), next.end());
        if (out.size() == before) return out;
      }
    }
    case Regex::Kind::Plus: {
      StrSet l = lang(r->a, u);
      StrSet star = lang(Regex::star(r->a), u);
      return concat_sets(l, star, u);
    }
    case Regex::Kind::Repeat:
    case Regex::Kind::RepeatRange: {
      StrSet l = lang(r->a, u);
      int k2 = r->kind == Regex::Kind::Repeat ? r->k1 : r->k2;
      StrSet pow = {""};
      StrSet out;
      for (int k = 0; k <= k2; k++) {
        if (k >= r->k1) out.insert(pow.begin(), pow.end());
        pow = concat_sets(pow, l, u);
      }
      return out;
    }
    case Regex::Kind::Concat:
      return concat_sets(lang(r->a, u), lang(r->b, u), u);
    case Regex::Kind::Union: {
      StrSet out = lang(r->a, u);
      StrSet bs = lang(r->b, u);
      out.insert(bs.begin(), bs.end());
      return out;
    }
    case Regex::Kind::Inter: {
      StrSet as = lang(r->a, u), bs = lang(r->b, u), out;
      for (auto &s : as)
        if (bs.count(s)) out.insert(s);
      return out;
    }
    default:
      throw std::logic_error("semantic construct in syntactic reference");
  }
}

std::vector<std::string> star_slots(const RegexPtr &r_star,
                                    const std::vector<std::string> &tuple) {
  // Projects a full child tuple onto its `.*` (non-constant) slots.
  std::vector<RegexPtr> kids;
  std::vector<RegexPtr> stack = {r_star};
  std::function<void(const RegexPtr &)> flat = [&](const RegexPtr &n) {
    if (n->kind == Regex::Kind::Concat) {
      flat(n->a);
      flat(n->b);
    } else {
      kids.push_back(n);
    }
  };
  flat(r_star);
  std::vector<std::string> out;
  for (size_t i = 0; i < kids.size(); i++)
    if (kids[i]->kind != Regex::Kind::Const) out.push_back(tuple[i]);
  return out;
}

}  // namespace

TEST_CASE("semantic match examples") {
  auto oracle = testing::tiny_oracle();
  auto year = parse_regex("{<Year> -> v<1900}");
  CHECK(matches(year, "1815", oracle.get()));
  CHECK_FALSE(matches(year, "1948", oracle.get()));

  CHECK(matches(parse_regex("{<Date> -> v.month=5}"), "May 2023", oracle.get()));
  CHECK_FALSE(matches(parse_regex("{<Date> -> v.month=5}"), "2023-06-01",
                      oracle.get()));
  CHECK(matches(parse_regex("{<toUpper(City)>}"), "NEW YORK", oracle.get()));
  CHECK_FALSE(matches(parse_regex("{<toUpper(City)>}"), "New York", oracle.get()));
  CHECK(matches(parse_regex("{<Country> -> v in Europe}"), "France", oracle.get()));
  CHECK_FALSE(matches(parse_regex("{<Country> -> v in Europe}"), "United States",
                      oracle.get()));
  CHECK(matches(parse_regex("{<abbreviate[.](City)>}"), "N.Y.", oracle.get()));
}

TEST_CASE("trivial denotations") {
  CHECK_FALSE(matches(Regex::empty(), ""));
  CHECK(matches(Regex::constant(""), ""));
  CHECK_FALSE(matches(Regex::constant(""), "a"));
  CHECK(matches(parse_regex("~∅"), "anything at all"));
}

TEST_CASE("predicate evaluation") {
  auto oracle = testing::tiny_oracle();
  CastValue year1815 = *cast_builtin("1815", "Year");
  CHECK(eval_pred(parse_regex("{<Year> -> v<1900}")->pred, year1815, oracle.get()));
  CHECK(eval_pred(Pred::truth(), year1815, nullptr));

  CastValue france;
  france.type = "Country";
  france.entity = "France";
  CHECK(eval_pred(parse_regex("{<Country> -> v in Europe}")->pred, france,
                  oracle.get()));
  CHECK(eval_pred(parse_regex("{<Country> -> inRegion(Europe)}")->pred, france,
                  oracle.get()));
  CHECK_FALSE(eval_pred(parse_regex("{<Country> -> inRegion(NorthAmerica)}")->pred,
                        france, oracle.get()));

  CastValue t = *cast_builtin("08:15:00", "Time");
  CHECK(eval_pred(parse_regex("{<Time> -> isMorning}")->pred, t, nullptr));
  CHECK_FALSE(eval_pred(parse_regex("{<Time> -> isAfternoon}")->pred, t, nullptr));
  CHECK(eval_pred(parse_regex("{<Time> -> btwHour(5,11)}")->pred, t, nullptr));

  // Attribute misuse is a loud error; a missing attribute value is just false.
  CHECK_THROWS_AS(
      eval_pred(parse_regex("{<Year> -> v.month=5}")->pred, year1815, nullptr),
      AttributeError);
  CastValue may = *cast_builtin("May 2023", "Date");
  CHECK_FALSE(eval_pred(parse_regex("{<Date> -> v.day=1}")->pred, may, nullptr));
}

TEST_CASE("inverse image checks") {
  auto oracle = testing::tiny_oracle();
  CHECK(inverse_check(*oracle, Func::to_upper(), "ROME", "City"));
  CHECK_FALSE(inverse_check(*oracle, Func::to_upper(), "ROMA", "City"));
  CHECK(inverse_check(*oracle, Func::id(), "France", "Country"));
  CHECK(inverse_check(*oracle, Func::abbreviate('.'), "N.Y.", "Place"));
  CHECK_FALSE(inverse_check(*oracle, Func::abbreviate('.'), "N,Y.", "Place"));
  CHECK(inverse_check(*oracle, Func::substring(0, 3), "Rom", "City"));
  // Syntactic domains are enumerable too.
  CHECK(inverse_check(*oracle, Func::to_upper(), "MAY", "Month"));
  CHECK(inverse_check(*oracle, Func::substring(0, 2), "18", "Year"));
}

TEST_CASE("over-approximation widens holes and semantic nodes") {
  auto s = parse_sketch("{??: Name}, {??: Country}, {??: Year}-{??: Year}");
  CHECK(print_regex(overapprox(s)) == ".*, .*, .*-.*");
  CHECK(print_regex(overapprox(parse_sketch("~{??: Name}"))) == "~∅");
  CHECK(print_regex(overapprox(parse_regex("{<Year>}x"))) == ".*x");
  auto plain = parse_regex("ab|c*");
  CHECK(regex_equal(overapprox(plain), plain));
}

TEST_CASE("split enumeration") {
  auto r = parse_regex(".*, .*, .*-.*");
  auto tuples =
      match_splits(r, "Thomas Hudson, Britain, 1701-1779");
  REQUIRE(!tuples.empty());
  CHECK(tuples[0].size() == 7);
  CHECK(star_slots(r, tuples[0]) ==
        std::vector<std::string>{"Thomas Hudson", "Britain", "1701", "1779"});

  CHECK(match_splits(parse_regex("a.*"), "b").empty());

  auto dash = parse_regex(".*-.*");
  auto two = match_splits(dash, "1-2-3");
  REQUIRE(two.size() == 2);
  CHECK(star_slots(dash, two[0]) == std::vector<std::string>{"1", "2-3"});
  CHECK(star_slots(dash, two[1]) == std::vector<std::string>{"1-2", "3"});
}

TEST_CASE("agreement with the set-semantics reference") {
  const std::string alphabet = "ab01,";
  StrSet u = all_strings(alphabet, 4);
  testing::Gen gen(77);
  for (int i = 0; i < 300; i++) {
    auto r = gen.regex(1 + gen.pick(3), alphabet, /*allow_sem=*/false,
                       /*allow_holes=*/false);
    StrSet expected = lang(r, u);
    Matcher m(r);
    for (auto &s : u) {
      bool got = m.full_match(s);
      if (got != (expected.count(s) > 0)) {
        CAPTURE(print_regex(r));
        CAPTURE(s);
        CHECK(got == (expected.count(s) > 0));
      }
    }
  }
}

TEST_CASE("memoization transparency") {
  const std::string alphabet = "ab01,";
  StrSet u = all_strings(alphabet, 4);
  testing::Gen gen(99);
  for (int i = 0; i < 60; i++) {
    auto r = gen.regex(1 + gen.pick(3), alphabet, false, false);
    Matcher with(r, nullptr, /*use_memo=*/true);
    Matcher without(r, nullptr, /*use_memo=*/false);
    for (auto &s : u) CHECK(with.full_match(s) == without.full_match(s));
  }
}

TEST_CASE("monotone semantics over the static dictionaries") {
  auto oracle = testing::tiny_oracle();
  auto city = parse_regex("{<City>}");
  auto place = parse_regex("{<Place>}");
  for (auto &s : oracle->extent("Place")) {
    if (matches(city, s, oracle.get())) CHECK(matches(place, s, oracle.get()));
  }
  CHECK(matches(place, "Rome", oracle.get()));
}

TEST_CASE("over-approximation soundness on random sketches") {
  const std::string alphabet = "ab01,";
  StrSet u = all_strings(alphabet, 4);
  auto oracle = testing::tiny_oracle();
  testing::Gen gen(2024);
  for (int i = 0; i < 120; i++) {
    auto sketch = gen.regex(1 + gen.pick(3), alphabet, /*allow_sem=*/true,
                            /*allow_holes=*/true, /*allow_not=*/false);
    auto wide = overapprox(sketch);
    // Instantiate holes with random concrete syntactic regexes.
    RegexPtr inst = sketch;
    for (auto &h : collect_holes(testing::renumber_holes(sketch))) (void)h;
    auto concrete = testing::renumber_holes(sketch);
    for (auto &h : collect_holes(concrete))
      concrete = substitute_hole(concrete, h->hole_id,
                                 gen.regex(1 + gen.pick(2), alphabet, false, false,
                                           /*allow_not=*/false));
    Matcher mr(concrete, oracle.get());
    Matcher mw(wide, oracle.get());
    for (auto &s : u)
      if (mr.full_match(s)) CHECK(mw.full_match(s));
  }
}

TEST_CASE("hole assignment enumeration") {
  auto oracle = testing::tiny_oracle();

  auto s1 = parse_sketch("{??: Name}, {??: Country}");
  auto a1 = enumerate_assignments(s1, "Thomas Hudson, Britain", oracle.get());
  REQUIRE(a1.size() == 1);
  auto holes1 = collect_holes(s1);
  CHECK(a1[0].pieces.at(holes1[0]->hole_id) ==
        std::vector<std::string>{"Thomas Hudson"});
  CHECK(a1[0].pieces.at(holes1[1]->hole_id) ==
        std::vector<std::string>{"Britain"});

  auto admit = [&](const Regex &hole, const std::string &piece) {
    return hole_type_admits(*oracle, piece, hole.hole_ty);
  };

  // Union routing: the untaken branch's hole is unconstrained.
  auto s2 = parse_sketch("{??: Year}|x");
  int h2 = collect_holes(s2)[0]->hole_id;
  auto on_x = enumerate_assignments(s2, "x", oracle.get(), admit);
  REQUIRE(on_x.size() == 1);
  CHECK(on_x[0].pieces.at(h2).empty());
  auto on_year = enumerate_assignments(s2, "1815", oracle.get(), admit);
  REQUIRE(on_year.size() == 1);
  CHECK(on_year[0].pieces.at(h2) == std::vector<std::string>{"1815"});

  // Repetition collects one piece per iteration.
  auto s3 = parse_sketch("({??: Integer},)*");
  int h3 = collect_holes(s3)[0]->hole_id;
  auto reps = enumerate_assignments(s3, "1,2,", oracle.get());
  bool found = false;
  for (auto &a : reps)
    if (a.pieces.at(h3) == std::vector<std::string>{"1", "2"}) found = true;
  CHECK(found);

  // Admission filter prunes routings eagerly.
  auto s4 = parse_sketch("{??: Year}-{??: Year}");
  auto a4 = enumerate_assignments(s4, "1701-1779", oracle.get(), admit);
  REQUIRE(a4.size() == 1);
  auto bad = enumerate_assignments(s4, "hello-world", oracle.get(), admit);
  CHECK(bad.empty());

  // A concrete regex yields the single empty assignment iff it matches.
  CHECK(enumerate_assignments(parse_regex("abc"), "abc", oracle.get()).size() == 1);
  CHECK(enumerate_assignments(parse_regex("abc"), "abd", oracle.get()).empty());
}
