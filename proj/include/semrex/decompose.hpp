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

#ifndef SEMREX_DECOMPOSE_HPP
#define SEMREX_DECOMPOSE_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "semrex/ast.hpp"
#include "semrex/oracle.hpp"

namespace semrex {

// Two parts of a merge claimed the same hole (an invariant violation).
struct DuplicateHole : std::logic_error {
  explicit DuplicateHole(int id)
      : std::logic_error("hole " + std::to_string(id) +
                         " assigned by more than one merge argument") {}
};

// A decomposition: for each hole, one list per positive example of the
// substrings routed to that hole in that example. An empty inner list means
// the hole was on an untaken branch for that example (unconstrained there);
// a repetition hole may receive several substrings from one example.
struct Decomp {
  std::map<int, std::vector<std::vector<std::string>>> assignment;

  bool operator==(const Decomp &o) const { return assignment == o.assignment; }
  bool operator<(const Decomp &o) const { return assignment < o.assignment; }
};

// Number of empty-string/unconstrained entries, the quantity the ranking
// minimizes ("minimize the number of holes that are assigned empty strings").
int epsilon_count(const Decomp &d);

// Disjoint union; nullopt arguments (the failure value) make the whole merge
// fail. DuplicateHole when two parts claim the same hole id.
std::optional<Decomp> merge(const std::vector<std::optional<Decomp>> &parts);

struct DecompOptions {
  size_t cap = 256;          // Max decompositions per sketch.
  bool typed_holes = true;   // Hole-type admissibility filter on routings.
  bool warn_on_cap = true;
};

// Every decomposition of the positives against the sketch, deduplicated and
// ranked (fewest empty/unconstrained entries first; ties keep enumeration
// order). Empty result means the sketch is infeasible for these examples.
std::vector<Decomp> decompositions(const RegexPtr &sketch,
                                   const std::vector<std::string> &positives,
                                   Oracle *oracle,
                                   const DecompOptions &opts = {});

}  // namespace semrex

#endif
