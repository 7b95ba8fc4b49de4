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

#ifndef SEMREX_SYNTAX_HPP
#define SEMREX_SYNTAX_HPP

#include <stdexcept>
#include <string>

#include "semrex/ast.hpp"

namespace semrex {

struct SyntaxError : std::runtime_error {
  size_t offset;
  std::string expected;
  SyntaxError(size_t off, const std::string &exp)
      : std::runtime_error("syntax error at offset " + std::to_string(off) +
                           ": expected " + exp),
        offset(off),
        expected(exp) {}
};

struct UnknownBuiltinType : std::runtime_error {
  explicit UnknownBuiltinType(const std::string &name)
      : std::runtime_error("predicate on non-built-in type: " + name) {}
};

// Parses the concrete surface syntax (see docs/grammar.md). parse_regex rejects
// holes; parse_sketch additionally accepts {??: T} and {??}.
RegexPtr parse_regex(const std::string &text);
RegexPtr parse_sketch(const std::string &text);

std::string print_regex(const RegexPtr &r);  // Canonical; reparses structurally equal.

Ty parse_ty(const std::string &text);

}  // namespace semrex

#endif
