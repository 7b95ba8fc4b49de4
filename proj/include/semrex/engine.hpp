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

#ifndef SEMREX_ENGINE_HPP
#define SEMREX_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "semrex/ast.hpp"
#include "semrex/cast.hpp"
#include "semrex/oracle.hpp"

namespace semrex {

// A predicate referenced an attribute not defined for the value's type
// (a well-formedness bug in the regex, surfaced loudly).
struct AttributeError : std::runtime_error {
  explicit AttributeError(const std::string &what) : std::runtime_error(what) {}
};

// Full-string membership decision with per-call memoization over (node, span).
// Reentrant: one Matcher per thread / per string.
class Matcher {
 public:
  explicit Matcher(RegexPtr root, Oracle *oracle = nullptr, bool use_memo = true);

  bool full_match(const std::string &s);

  // Bind a subject string (resetting the memo) without matching; then match
  // arbitrary subtrees of the root against spans of it.
  void bind(const std::string &s);
  bool match(const Regex *r, int b, int e);

 private:
  bool compute(const Regex *r, int b, int e);
  // k_min..k_max repetitions of r over [b,e); k_max < 0 means unbounded.
  bool rep_match(const Regex *r, int b, int e, int k_min, int k_max);

  RegexPtr root_;
  Oracle *oracle_;
  bool use_memo_;
  const std::string *s_ = nullptr;
  std::unordered_map<const Regex *, int> index_;  // Node -> dense id.
  int n_nodes_ = 0;
  std::vector<int8_t> memo_;  // 0 unknown, 1 yes, 2 no.
  int len_ = 0;
};

bool matches(const RegexPtr &r, const std::string &s, Oracle *oracle = nullptr);

// Boolean evaluation of a predicate against a cast value; v binds to o.
// The oracle answers geo membership for in/inRegion/inCountry/inState.
bool eval_pred(const PredPtr &phi, const CastValue &o, Oracle *oracle = nullptr);

// All s' with has_type(s', tau) and apply_func(f, s') == s, drawn from the
// oracle's enumerable extent plus the finite built-in domains. For f = id this
// is {s} when has_type holds. Non-enumerable cases use conservative per-
// function checks (fully-cased strings for toUpper/toLower, shape checks for
// abbreviate, plain membership for substring).
std::vector<std::string> preimages(Oracle &oracle, const Func &f,
                                   const std::string &s, const std::string &tau);

// True iff some s' of type tau maps to s under f.
bool inverse_check(Oracle &oracle, const Func &f, const std::string &s,
                   const std::string &tau);

// Widens every hole and semantic construct to the syntactic top/bottom by
// negation parity: `.*` under an even number of negations, the empty language
// under an odd number. The result is a plain regex whose language contains
// the language of every instantiation of x.
RegexPtr overapprox(const RegexPtr &x);

// The same widening but preserving holes and meta-holes, so splits of the
// widened sketch can still be projected onto hole ids. Hole-free subtrees
// (including any negations, under which holes are forbidden anyway) defer to
// the overapproximation proper.
RegexPtr widen_keep_holes(const RegexPtr &x);

// All ways to split e across the top-level concatenation children of r_star
// (each child matching its piece, full-string). A non-concatenation r_star is
// treated as a single child. Deterministic order: earlier children take
// shorter pieces first. The optional cap bounds the number of tuples.
std::vector<std::vector<std::string>> match_splits(const RegexPtr &r_star,
                                                   const std::string &e,
                                                   Oracle *oracle = nullptr,
                                                   size_t cap = 4096);

// One way a single example string can be carved up among the holes of a
// sketch: hole id -> substrings routed to that hole in left-to-right order.
// A hole on an untaken branch (skipped optional, other union arm, zero
// repetitions) is keyed with an empty list, meaning "unconstrained here".
struct HoleAssignment {
  std::map<int, std::vector<std::string>> pieces;

  bool operator==(const HoleAssignment &o) const { return pieces == o.pieces; }
  bool operator<(const HoleAssignment &o) const { return pieces < o.pieces; }
};

// Every assignment of e to the holes of sketch, deduplicated, in
// deterministic order (earlier/left splits first). Concrete subtrees must
// match their spans exactly; `admit` (when set) prunes a routing as soon as a
// hole receives a piece it rejects. Subtrees under a negation cannot contain
// holes (no routing through complements); such assignments are dropped.
std::vector<HoleAssignment> enumerate_assignments(
    const RegexPtr &sketch, const std::string &e, Oracle *oracle,
    const std::function<bool(const Regex &hole, const std::string &piece)> &admit =
        nullptr,
    size_t cap = 4096);

}  // namespace semrex

#endif
