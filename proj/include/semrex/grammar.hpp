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

#ifndef SEMREX_GRAMMAR_HPP
#define SEMREX_GRAMMAR_HPP

#include <string>
#include <vector>

#include "semrex/ast.hpp"
#include "semrex/oracle.hpp"
#include "semrex/ty.hpp"

namespace semrex {

// The finite production table one hole completion draws from. The ranked
// enumerator and the exhaustive reference enumeration used by the tests both
// build from the same table, so they cover the same grammar slice:
//
//   leaves:    Const(c), char classes, {<f(tau)>}, {<f(tau_b)> -> phi},
//              Contain(c) = .*c.*  (a single derived production)
//   operators: r?, r+, r*, r r, r | r, r & r
//
// Derivation depth counts one level per production, so Contain is depth 1.
struct GrammarSlice {
  std::vector<std::string> sem_types;  // Semantic-match type names, sorted.
  std::vector<double> constants;       // Numeric predicate constants, sorted.
  std::vector<std::string> texts;          // Const texts, sorted.
  std::vector<std::string> contain_texts;  // Substrings of every positive.
  std::vector<std::string> regions;    // inRegion arguments.
  std::vector<std::string> countries;  // inCountry arguments (City only).
};

// Builds the table for one hole. Semantic names come from the oracle; when
// type_pruning is on and the goal is a semantic type, only its subtypes are
// kept (and a CharSeq goal keeps none). Numeric constants are the maximal
// digit runs of the example strings plus fixed anchors {0,100,1000,1900,2000};
// literal texts are the positive pieces and their whitespace-separated words.
GrammarSlice make_slice(Oracle &oracle, const Ty &goal,
                        const std::vector<std::string> &positives,
                        const std::vector<std::string> &relevant,
                        bool type_pruning);

// All depth-1 productions of the table, in deterministic order.
//
// Semantic matches: every type takes f = id; entity (non-syntactic) types
// additionally take toUpper, toLower and abbreviate[.]. Predicates attach to
// built-in types only: numeric types get v <op> c for the five comparison
// operators; Date gets attribute comparisons and isYear/isMonth/isDate; Time
// gets attribute comparisons, the day-segment tests and the btw ranges;
// geographic entity types get inRegion (and inCountry for City).
std::vector<RegexPtr> leaf_productions(const GrammarSlice &g);

// .*c.* — the derived "contains c" production. Contain draws from
// GrammarSlice::contain_texts, the texts occurring in every positive piece: a
// containment feature the positives don't share can only appear inside a
// union that memorizes the examples.
RegexPtr contain(const std::string &c);

// Composition guard shared by the enumerator and the reference enumeration:
// unions reject bare string literals as operands, because alternations of
// example literals memorize the training pieces and would outrank any
// genuine generalization.
bool valid_union_operand(const RegexPtr &r);

}  // namespace semrex

#endif
