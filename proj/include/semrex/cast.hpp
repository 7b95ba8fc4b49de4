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

#ifndef SEMREX_CAST_HPP
#define SEMREX_CAST_HPP

#include <optional>
#include <string>
#include <vector>

#include "semrex/ast.hpp"

namespace semrex {

// Typed parse of a string at a built-in type. Numeric types carry num; Date
// carries optional year/month/day; Time carries hour/minute/second; entity
// types carry the string itself.
struct CastValue {
  std::string type;
  bool has_num = false;
  double num = 0;
  std::optional<int> year, month, day;
  std::optional<int> hour, minute, second;
  std::string entity;
};

// Syntactic casts only (Number/Integer/Float/Year/Month/Day/Date/Time/
// Hour/Minute/Second); entity types are resolved through the oracle by the
// engine. nullopt when s does not parse at tau.
std::optional<CastValue> cast_builtin(const std::string &s, const std::string &tau);

// Every syntactic built-in name whose cast succeeds on s.
std::vector<std::string> builtin_cast_types(const std::string &s);

bool is_syntactic_builtin(const std::string &tau);

std::string apply_func(const Func &f, const std::string &s);

}  // namespace semrex

#endif
