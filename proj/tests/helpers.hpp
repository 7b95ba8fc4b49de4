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

#ifndef SEMREX_TESTS_HELPERS_HPP
#define SEMREX_TESTS_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "semrex/ast.hpp"
#include "semrex/oracle.hpp"
#include "semrex/syntax.hpp"

namespace semrex::testing {

inline std::string assets_dir() { return SEMREX_ASSETS_DIR; }

// Small deterministic knowledge base used across unit tests.
inline std::shared_ptr<StaticOracle> tiny_oracle() {
  const char *kb = R"({
    "dictionaries": {
      "Country": ["France", "Britain", "Italy", "Germany", "United States"],
      "City": ["Rome", "Paris", "New York", "Madison"],
      "Person": ["John Smith", "Alan Turing"],
      "Company": ["Acme Corp", "Globex"],
      "Name": ["Thomas Hudson", "Alma Thomas"]
    },
    "ontology": [["Company", "Organization"], ["Name", "Person"]],
    "geo": {
      "France": {"region": "Europe", "cities": ["Paris"]},
      "Britain": {"region": "Europe", "cities": []},
      "Italy": {"region": "Europe", "cities": ["Rome"]},
      "Germany": {"region": "Europe", "cities": []},
      "United States": {"region": "NorthAmerica", "cities": ["New York", "Madison"],
                        "states": ["WI"]}
    },
    "state_cities": {"WI": ["Madison"]}
  })";
  return std::make_shared<StaticOracle>(StaticKnowledgeBase::from_json_text(kb));
}

// Structural AST generator for round-trip and engine property tests.
struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}

  int pick(int n) { return (int)(rng() % (unsigned)n); }

  std::string lit(const std::string &alphabet, int max_len) {
    int n = 1 + pick(max_len);
    std::string s;
    for (int i = 0; i < n; i++) s += alphabet[pick((int)alphabet.size())];
    return s;
  }

  RegexPtr leaf(const std::string &alphabet, bool allow_sem, bool allow_holes) {
    int n = pick(allow_holes ? 12 : (allow_sem ? 10 : 8));
    switch (n) {
      case 0:
      case 1:
      case 2:
      case 3:
        return Regex::constant(lit(alphabet, 3));
      case 4:
        return Regex::char_class(CharClassKind::Any);
      case 5:
        return Regex::char_class(CharClassKind::Num);
      case 6:
        return Regex::char_class(CharClassKind::Let);
      case 7:
        return Regex::empty();
      case 8:
        return Regex::sem_q(pick(2) ? "Country" : "Name");
      case 9:
        return Regex::sem_b("Year", Func::id(),
                            Pred::cmp(Term::var(), CmpOp::Lt, Term::number(1900)));
      case 10:
        return Regex::hole(Ty::semantic(pick(2) ? "Year" : "Country"), 0);
      default:
        return Regex::hole(Ty::any(), 0);
    }
  }

  RegexPtr regex(int depth, const std::string &alphabet = "ab01,",
                 bool allow_sem = false, bool allow_holes = false,
                 bool allow_not = true) {
    if (depth <= 1) return leaf(alphabet, allow_sem, allow_holes);
    int n = pick(allow_not ? 9 : 8);
    auto sub = [&] { return regex(depth - 1, alphabet, allow_sem, allow_holes, allow_not); };
    switch (n) {
      case 0:
        return Regex::concat(sub(), sub());
      case 1:
        return Regex::union_(sub(), sub());
      case 2:
        return Regex::inter(sub(), sub());
      case 3:
        return Regex::star(sub());
      case 4:
        return Regex::plus(sub());
      case 5:
        return Regex::opt(sub());
      case 6:
        return Regex::repeat(sub(), 1 + pick(3));
      case 7: {
        int k1 = pick(3);
        return Regex::repeat_range(sub(), k1, k1 + pick(3));
      }
      default:
        return Regex::negate(sub());
    }
  }
};

// Reassigns hole ids in left-to-right order (generators emit duplicates).
inline RegexPtr renumber_holes(const RegexPtr &r) {
  std::string printed = print_regex(r);
  return parse_sketch(printed);  // Parser assigns fresh sequential ids.
}

}  // namespace semrex::testing

#endif
