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

#ifndef SEMREX_SKETCHGEN_HPP
#define SEMREX_SKETCHGEN_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "semrex/ast.hpp"
#include "semrex/oracle.hpp"

namespace semrex {

// The backend kept answering with unparseable sketches.
struct ParseRetryExceeded : std::runtime_error {
  explicit ParseRetryExceeded(int attempts)
      : std::runtime_error("sketch response unparseable after " +
                           std::to_string(attempts) + " attempts") {}
};

// Result of error localization: the failed sketch with the blamed regions
// replaced by meta-holes, plus the example substrings each meta-hole must
// cover (what the repair query asks the oracle to re-sketch).
struct RepairSpec {
  RegexPtr sketch;  // Contains the surviving parts plus fresh meta-holes.
  std::map<int, std::vector<std::string>> meta_examples;  // Meta-hole id -> E+.
};

// Localizes why `failed` cannot cover the positives. Structure-level failures
// (the widened sketch rejects an example) blame a single restoring child when
// exactly one exists, otherwise collapse to one meta-hole over all examples.
// When the structure fits, the examples are split across the concatenation
// and the blame recurses into the children: type-inconsistent holes and
// non-matching concrete parts become meta-holes carrying their pieces.
RepairSpec locate_error(const RegexPtr &failed,
                        const std::vector<std::string> &positives,
                        std::shared_ptr<Oracle> oracle);

// Stream of candidate sketches. A plain pull asks the oracle to sketch the
// positives; a pull with a failed sketch localizes its error and asks the
// oracle to re-sketch only the blamed parts (unless repair is disabled, in
// which case every pull is fresh). Duplicates are skipped; nullopt means the
// backend is exhausted (see end_reason()). Unparseable responses are retried
// up to retry_cap times, then ParseRetryExceeded is thrown.
class SketchStream {
 public:
  SketchStream(std::shared_ptr<Oracle> oracle, std::vector<std::string> positives,
               bool allow_repair = true, int retry_cap = 5);

  std::optional<RegexPtr> next(const RegexPtr &failed = nullptr);
  const std::string &end_reason() const { return end_reason_; }

 private:
  RegexPtr pull_parse(const std::vector<std::string> &examples);

  std::shared_ptr<Oracle> oracle_;
  std::vector<std::string> positives_;
  bool allow_repair_;
  int retry_cap_;
  std::set<std::string> seen_;
  std::string end_reason_;
};

}  // namespace semrex

#endif
