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

#include "semrex/cast.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace semrex {

namespace {

bool all_digits(const std::string &s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit((unsigned char)c)) return false;
  return true;
}

std::optional<long long> parse_int(const std::string &s) {
  std::string body = s;
  bool neg = false;
  if (!body.empty() && body[0] == '-') {
    neg = true;
    body = body.substr(1);
  }
  if (!all_digits(body) || body.size() > 15) return std::nullopt;
  long long v = std::atoll(body.c_str());
  return neg ? -v : v;
}

std::optional<double> parse_float(const std::string &s) {
  if (s.empty()) return std::nullopt;
  size_t i = 0;
  if (s[0] == '-') i = 1;
  bool digits = false, dot = false;
  for (; i < s.size(); i++) {
    if (std::isdigit((unsigned char)s[i]))
      digits = true;
    else if (s[i] == '.' && !dot)
      dot = true;
    else
      return std::nullopt;
  }
  if (!digits) return std::nullopt;
  return std::strtod(s.c_str(), nullptr);
}

std::optional<int> month_of(const std::string &s) {
  static const char *names[] = {"January",   "February", "March",    "April",
                                "May",       "June",     "July",     "August",
                                "September", "October",  "November", "December"};
  for (int m = 0; m < 12; m++)
    if (s == names[m]) return m + 1;
  if (all_digits(s) && s.size() <= 2) {
    int v = std::atoi(s.c_str());
    if (v >= 1 && v <= 12) return v;
  }
  return std::nullopt;
}

std::optional<int> bounded_int(const std::string &s, int lo, int hi, size_t max_len) {
  if (!all_digits(s) || s.size() > max_len) return std::nullopt;
  int v = std::atoi(s.c_str());
  if (v < lo || v > hi) return std::nullopt;
  return v;
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); i++) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::optional<CastValue> cast_date(const std::string &s) {
  CastValue v;
  v.type = "Date";
  // YYYY-MM-DD
  {
    auto parts = split(s, '-');
    if (parts.size() == 3) {
      auto y = bounded_int(parts[0], 0, 9999, 4);
      auto m = bounded_int(parts[1], 1, 12, 2);
      auto d = bounded_int(parts[2], 1, 31, 2);
      if (y && m && d) {
        v.year = *y;
        v.month = *m;
        v.day = *d;
        return v;
      }
      return std::nullopt;
    }
  }
  // MM/DD/YYYY
  {
    auto parts = split(s, '/');
    if (parts.size() == 3) {
      auto m = bounded_int(parts[0], 1, 12, 2);
      auto d = bounded_int(parts[1], 1, 31, 2);
      auto y = bounded_int(parts[2], 0, 9999, 4);
      if (y && m && d) {
        v.year = *y;
        v.month = *m;
        v.day = *d;
        return v;
      }
      return std::nullopt;
    }
  }
  // "MonthName YYYY" or "MonthName DD"
  {
    auto parts = split(s, ' ');
    if (parts.size() == 2) {
      auto m = month_of(parts[0]);
      if (m && !all_digits(parts[0])) {
        v.month = *m;
        if (auto d = bounded_int(parts[1], 1, 31, 2)) {
          v.day = *d;
          return v;
        }
        if (auto y = bounded_int(parts[1], 0, 9999, 4)) {
          v.year = *y;
          return v;
        }
      }
      return std::nullopt;
    }
  }
  // Bare year.
  if (auto y = bounded_int(s, 0, 9999, 4)) {
    v.year = *y;
    return v;
  }
  return std::nullopt;
}

std::optional<CastValue> cast_time(const std::string &s) {
  auto parts = split(s, ':');
  if (parts.size() != 2 && parts.size() != 3) return std::nullopt;
  auto h = bounded_int(parts[0], 0, 23, 2);
  auto m = bounded_int(parts[1], 0, 59, 2);
  if (!h || !m || parts[1].size() != 2) return std::nullopt;
  CastValue v;
  v.type = "Time";
  v.hour = *h;
  v.minute = *m;
  v.second = 0;
  if (parts.size() == 3) {
    auto sec = bounded_int(parts[2], 0, 59, 2);
    if (!sec || parts[2].size() != 2) return std::nullopt;
    v.second = *sec;
  }
  return v;
}

}  // namespace

bool is_syntactic_builtin(const std::string &tau) {
  static const char *names[] = {"Number", "Integer", "Float",  "Year",
                                "Month",  "Day",     "Date",   "Time",
                                "Hour",   "Minute",  "Second"};
  for (auto *n : names)
    if (tau == n) return true;
  return false;
}

std::optional<CastValue> cast_builtin(const std::string &s, const std::string &tau) {
  CastValue v;
  v.type = tau;
  if (tau == "Integer") {
    auto n = parse_int(s);
    if (!n) return std::nullopt;
    v.has_num = true;
    v.num = (double)*n;
    return v;
  }
  if (tau == "Float" || tau == "Number") {
    auto n = parse_float(s);
    if (!n) return std::nullopt;
    v.has_num = true;
    v.num = *n;
    return v;
  }
  if (tau == "Year") {
    auto n = bounded_int(s, 0, 9999, 4);
    if (!n) return std::nullopt;
    v.has_num = true;
    v.num = *n;
    v.year = *n;
    return v;
  }
  if (tau == "Month") {
    auto m = month_of(s);
    if (!m) return std::nullopt;
    v.has_num = true;
    v.num = *m;
    v.month = *m;
    return v;
  }
  if (tau == "Day") {
    auto d = bounded_int(s, 1, 31, 2);
    if (!d) return std::nullopt;
    v.has_num = true;
    v.num = *d;
    v.day = *d;
    return v;
  }
  if (tau == "Hour") {
    auto h = bounded_int(s, 0, 23, 2);
    if (!h) return std::nullopt;
    v.has_num = true;
    v.num = *h;
    v.hour = *h;
    return v;
  }
  if (tau == "Minute" || tau == "Second") {
    auto n = bounded_int(s, 0, 59, 2);
    if (!n) return std::nullopt;
    v.has_num = true;
    v.num = *n;
    if (tau == "Minute")
      v.minute = *n;
    else
      v.second = *n;
    return v;
  }
  if (tau == "Date") return cast_date(s);
  if (tau == "Time") return cast_time(s);
  return std::nullopt;
}

std::vector<std::string> builtin_cast_types(const std::string &s) {
  static const char *names[] = {"Integer", "Float", "Number", "Year",  "Month",
                                "Day",     "Hour",  "Minute", "Second", "Date",
                                "Time"};
  std::vector<std::string> out;
  for (auto *n : names)
    if (cast_builtin(s, n)) out.push_back(n);
  return out;
}

std::string apply_func(const Func &f, const std::string &s) {
  switch (f.kind) {
    case FuncKind::Id:
      return s;
    case FuncKind::ToUpper: {
      std::string out = s;
      for (char &c : out) c = (char)std::toupper((unsigned char)c);
      return out;
    }
    case FuncKind::ToLower: {
      std::string out = s;
      for (char &c : out) c = (char)std::tolower((unsigned char)c);
      return out;
    }
    case FuncKind::Substring: {
      if (f.k1 < 0 || f.k2 > (int)s.size() || f.k1 > f.k2)
        throw std::out_of_range("substring bounds out of range");
      return s.substr(f.k1, f.k2 - f.k1);
    }
    case FuncKind::Abbreviate: {
      std::string out;
      bool at_word_start = true;
      for (char c : s) {
        if (std::isspace((unsigned char)c)) {
          at_word_start = true;
        } else {
          if (at_word_start) {
            out += c;
            out += f.sep;
          }
          at_word_start = false;
        }
      }
      return out;
    }
  }
  return s;
}

}  // namespace semrex
