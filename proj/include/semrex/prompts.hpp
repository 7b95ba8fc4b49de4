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

#ifndef SEMREX_PROMPTS_HPP
#define SEMREX_PROMPTS_HPP

#include <string>
#include <vector>

namespace semrex {

// Few-shot prompt asking for a regular-expression sketch of the positives;
// the in-context examples are fixed, the query block lists the positives as
// "- " lines and ends with "Sketch:".
std::string build_sketch_prompt(const std::vector<std::string> &positives);

// Few-shot prompt asking which substrings of s carry the semantic type tau;
// answers use the "[a];[b];[c]" / "none" format.
std::string build_typing_prompt(const std::string &s, const std::string &tau);

// Parses a "[a];[b];[c]" answer; "none" (or anything without brackets) is an
// empty list.
std::vector<std::string> parse_bracket_list(const std::string &response);

}  // namespace semrex

#endif
