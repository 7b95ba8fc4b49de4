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

#ifndef SEMREX_SYNTH_HPP
#define SEMREX_SYNTH_HPP

#include <chrono>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semrex/ast.hpp"
#include "semrex/decompose.hpp"
#include "semrex/oracle.hpp"
#include "semrex/ty.hpp"

namespace semrex {

struct SynthConfig {
  int max_depth = 4;        // Derivation-depth bound per hole completion.
  double timeout_s = 60;    // Wall clock minus oracle latency.
  size_t decomp_cap = 256;  // Max decompositions per sketch.
  int sketch_cap = 10;      // Max sketches pulled from the generator.

  // Ablation switches. Disabling decomposition also disables completion
  // deduplication (candidates are then only constrained globally).
  bool decompose_examples = true;
  bool typed_holes = true;
  bool locate_error = true;
  bool type_pruning = true;

  // Search bounds: survivors kept per derivation-depth level and compositions
  // attempted per level.
  size_t pool_cap = 512;
  size_t compose_cap = 20000;

  bool dedup_completions = true;
};

// Synthesis time budget: wall clock with the oracle's cumulative external
// latency subtracted.
class Budget {
 public:
  Budget(double limit_s, const Oracle *oracle)
      : start_(std::chrono::steady_clock::now()),
        limit_(limit_s),
        oracle_(oracle),
        latency0_(oracle ? oracle->latency_seconds() : 0) {}

  double elapsed() const {
    double wall = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start_)
                      .count();
    if (oracle_) wall -= oracle_->latency_seconds() - latency0_;
    return wall;
  }
  bool exceeded() const { return elapsed() > limit_; }

 private:
  std::chrono::steady_clock::time_point start_;
  double limit_;
  const Oracle *oracle_;
  double latency0_;
};

// One ranked hole completion: a concrete regex together with the subset of
// the relevant strings it rejects (its rejection signature).
struct Completion {
  RegexPtr regex;
  std::vector<bool> rejects;  // Parallel to the relevant-strings argument.
  int height = 0;
  int nodes = 0;
  std::string printed;
};

// Ranked candidate stream for one hole, materialized eagerly. Candidates are
// drawn from the shared production table up to cfg.max_depth, must match
// every positive piece, are ordered by (height, node count, printed form) and
// — when cfg.dedup_completions — keep only the first representative of each
// rejection signature over the relevant strings.
std::vector<Completion> get_next_completion(std::shared_ptr<Oracle> oracle,
                                            const Ty &hole_ty,
                                            const std::vector<std::string> &positives,
                                            const std::vector<std::string> &relevant,
                                            const SynthConfig &cfg = {});

// The substrings of the negative examples that the given hole could absorb:
// negatives the sketch's widening rejects outright contribute nothing; the
// rest contribute the hole's piece in every split of the widened sketch.
// Order follows the negatives, then split order; duplicates keep their first
// position.
std::vector<std::string> relevant_substrings(const RegexPtr &sketch, int hole_id,
                                             const std::vector<std::string> &negatives,
                                             std::shared_ptr<Oracle> oracle,
                                             size_t cap = 1024);

struct HoleSolution {
  std::map<int, RegexPtr> fills;  // Hole id -> completion.
};

// Best-first product search over the per-hole completion streams of one
// decomposition: states are ordinal tuples ordered by ordinal sum, ties by
// the printed instantiation; the first instantiation that matches every
// positive and rejects every negative wins. nullopt when the streams are
// exhausted or the budget runs out.
std::optional<HoleSolution> synthesize_from_decomp(
    const RegexPtr &sketch, const Decomp &psi,
    const std::vector<std::string> &positives,
    const std::vector<std::string> &negatives, std::shared_ptr<Oracle> oracle,
    const SynthConfig &cfg = {}, const Budget *budget = nullptr);

RegexPtr instantiate(const RegexPtr &sketch, const HoleSolution &sol);

struct SynthResult {
  bool ok = false;
  RegexPtr regex;  // Set iff ok.
  bool timed_out = false;
  std::string reason;  // Human-readable failure reason when !ok.
  double seconds = 0;
  int sketches_tried = 0;
};

// The full pipeline: pull sketches (repairing failed ones through error
// localization unless disabled), decompose the positives, search completions.
// Preconditions: positives nonempty and disjoint from negatives.
SynthResult synthesize(const std::vector<std::string> &positives,
                       const std::vector<std::string> &negatives,
                       std::shared_ptr<Oracle> oracle,
                       const SynthConfig &cfg = {});

}  // namespace semrex

#endif
