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

#ifndef SEMREX_TYPESYS_HPP
#define SEMREX_TYPESYS_HPP

#include <string>
#include <vector>

#include "semrex/ast.hpp"
#include "semrex/ty.hpp"

namespace semrex {

class Oracle;

bool is_builtin_type_name(const std::string &name);
const std::vector<std::string> &builtin_type_names();

// Name-level subtyping over the fixed built-in forest (reflexive).
bool builtin_name_subtype(const std::string &a, const std::string &b);

// Built-in table plus oracle.user_subtype for names involving user types.
bool name_subtype(const std::string &a, const std::string &b, Oracle *oracle);

bool subtype(const Ty &t1, const Ty &t2, Oracle *oracle = nullptr);
Ty meet(const Ty &t1, const Ty &t2, Oracle *oracle = nullptr);
Ty join(const Ty &t1, const Ty &t2, Oracle *oracle = nullptr);

// Most precise derivable type before lifting; "r : tau" is
// subtype(type_of(r), tau). Works on sketches too (Hole -> declared type).
// A null oracle types constants as CharSeq.
Ty type_of(const RegexPtr &r, Oracle *oracle = nullptr);

}  // namespace semrex

#endif
