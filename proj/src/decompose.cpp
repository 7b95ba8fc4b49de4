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

#include "semrex/decompose.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "semrex/engine.hpp"

namespace semrex {

int epsilon_count(const Decomp &d) {
  int n = 0;
  for (auto &[id, per_example] : d.assignment)
    for (auto &pieces : per_example) {
      if (pieces.empty()) n++;  // Unconstrained (untaken branch).
      for (auto &p : pieces)
        if (p.empty()) n++;
    }
  return n;
}

std::optional<Decomp> merge(const std::vector<std::optional<Decomp>> &parts) {
  Decomp out;
  for (auto &p : parts) {
    if (!p) return std::nullopt;
    for (auto &[id, lists] : p->assignment) {
      if (out.assignment.count(id)) throw DuplicateHole(id);
      out.assignment[id] = lists;
    }
  }
  return out;
}

std::vector<Decomp> decompositions(const RegexPtr &sketch,
                                   const std::vector<std::string> &positives,
                                   Oracle *oracle, const DecompOptions &opts) {
  std::function<bool(const Regex &, const std::string &)> admit;
  if (opts.typed_holes && oracle)
    admit = [oracle](const Regex &hole, const std::string &piece) {
      return hole_type_admits(*oracle, piece, hole.hole_ty);
    };

  // Per-example routing alternatives; any example with none → infeasible.
  std::vector<std::vector<HoleAssignment>> alts;
  for (auto &e : positives) {
    auto a = enumerate_assignments(sketch, e, oracle, admit, opts.cap * 4);
    if (a.empty()) return {};
    alts.push_back(std::move(a));
  }
  std::vector<int> hole_ids;
  for (auto &h : collect_holes(sketch)) hole_ids.push_back(h->hole_id);

  // Cross product in lexicographic order of per-example alternative indices.
  std::vector<Decomp> out;
  std::set<Decomp> seen;
  std::vector<size_t> idx(positives.size(), 0);
  bool capped = false;
  for (;;) {
    Decomp d;
    for (int id : hole_ids) {
      auto &lists = d.assignment[id];
      for (size_t i = 0; i < positives.size(); i++)
        lists.push_back(alts[i][idx[i]].pieces.at(id));
    }
    if (seen.insert(d).second) {
      out.push_back(std::move(d));
      if (out.size() >= opts.cap) {
        capped = true;
        break;
      }
    }
    // Advance the odometer (last example varies fastest).
    size_t k = positives.size();
    while (k > 0) {
      k--;
      if (++idx[k] < alts[k].size()) break;
      idx[k] = 0;
      if (k == 0) goto done;
    }
    if (positives.empty()) break;  // Zero examples: single empty product.
  }
done:
  if (capped && opts.warn_on_cap)
    std::fprintf(stderr,
                 "semrex: decomposition stream capped at %zu for this sketch\n",
                 opts.cap);

  std::stable_sort(out.begin(), out.end(), [](const Decomp &a, const Decomp &b) {
    return epsilon_count(a) < epsilon_count(b);
  });
  return out;
}

}  // namespace semrex
