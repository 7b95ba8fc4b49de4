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

#include "semrex/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "semrex/cast.hpp"
#include "semrex/typesys.hpp"

namespace semrex {

using nlohmann::json;

std::vector<std::string> Oracle::known_types() { return builtin_type_names(); }

bool hole_type_admits(Oracle &oracle, const std::string &e, const Ty &tau) {
  if (tau.is_any()) return true;
  if (tau.is_no_type()) return false;
  if (tau.optional && e.empty()) return true;
  if (tau.kind == Ty::Kind::Semantic) return oracle.has_type(e, tau.name);
  // CharSeq: the string must have no semantic reading.
  return !oracle.semantic_type(e).has_value();
}

StaticKnowledgeBase StaticKnowledgeBase::from_json_text(const std::string &text) {
  StaticKnowledgeBase kb;
  json j = json::parse(text);
  if (j.contains("dictionaries"))
    for (auto &[ty, arr] : j["dictionaries"].items())
      for (auto &s : arr) kb.dictionaries[ty].insert(s.get<std::string>());
  if (j.contains("ontology"))
    for (auto &edge : j["ontology"])
      kb.ontology.emplace_back(edge[0].get<std::string>(), edge[1].get<std::string>());
  if (j.contains("geo"))
    for (auto &[country, entry] : j["geo"].items()) {
      StaticKnowledgeBase::GeoEntry g;
      if (entry.contains("region")) g.region = entry["region"].get<std::string>();
      if (entry.contains("cities"))
        for (auto &c : entry["cities"]) g.cities.insert(c.get<std::string>());
      if (entry.contains("states"))
        for (auto &c : entry["states"]) g.states.insert(c.get<std::string>());
      kb.geo[country] = std::move(g);
    }
  if (j.contains("state_cities"))
    for (auto &[state, arr] : j["state_cities"].items())
      for (auto &c : arr) kb.state_cities[state].insert(c.get<std::string>());
  if (j.contains("sketches"))
    for (auto &[key, arr] : j["sketches"].items())
      for (auto &s : arr) kb.sketch_table[key].push_back(s.get<std::string>());
  return kb;
}

StaticKnowledgeBase StaticKnowledgeBase::from_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open knowledge base: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

StaticOracle::StaticOracle(StaticKnowledgeBase kb) : kb_(std::move(kb)) {}

bool StaticOracle::user_subtype(const std::string &t1, const std::string &t2) {
  // Reachability over the ontology DAG plus the built-in forest, so user
  // types may hang below built-in ones (e.g. Name below Person).
  if (t1 == t2) return true;
  std::vector<std::string> frontier = {t1};
  std::set<std::string> seen = {t1};
  while (!frontier.empty()) {
    std::string cur = frontier.back();
    frontier.pop_back();
    std::vector<std::string> parents;
    for (auto &[c, p] : kb_.ontology)
      if (c == cur) parents.push_back(p);
    if (is_builtin_type_name(cur))
      for (auto &b : builtin_type_names())
        if (b != cur && builtin_name_subtype(cur, b)) parents.push_back(b);
    for (auto &p : parents) {
      if (p == t2) return true;
      if (seen.insert(p).second) frontier.push_back(p);
    }
  }
  return false;
}

std::vector<std::string> StaticOracle::type_and_descendants(
    const std::string &tau) const {
  std::vector<std::string> out;
  auto *self = const_cast<StaticOracle *>(this);
  for (auto &[ty, _] : kb_.dictionaries)
    if (self->user_subtype(ty, tau)) out.push_back(ty);
  return out;
}

bool StaticOracle::has_type(const std::string &s, const std::string &tau) {
  if (s.empty()) return false;
  // Syntactic built-ins below tau.
  for (auto &b : builtin_type_names())
    if (is_syntactic_builtin(b) && builtin_name_subtype(b, tau) &&
        cast_builtin(s, b))
      return true;
  if (is_syntactic_builtin(tau) && cast_builtin(s, tau)) return true;
  // Dictionary-backed extents (tau itself or any type reaching it).
  for (auto &ty : type_and_descendants(tau))
    if (kb_.dictionaries.at(ty).count(s)) return true;
  if (!is_builtin_type_name(tau) && type_and_descendants(tau).empty()) {
    static std::set<std::string> warned;
    if (warned.insert(tau).second)
      std::fprintf(stderr, "semrex: oracle has no dictionary for type %s\n",
                   tau.c_str());
  }
  return false;
}

std::vector<std::pair<int, int>> StaticOracle::typed_substrings(
    const std::string &s, const std::string &tau) {
  std::vector<std::pair<int, int>> out;
  size_t n = std::min(s.size(), (size_t)500);
  for (size_t i = 0; i < n; i++)
    for (size_t j = i + 1; j <= n; j++)
      if (has_type(s.substr(i, j - i), tau)) out.emplace_back((int)i, (int)j);
  return out;
}

std::optional<std::string> StaticOracle::semantic_type(const std::string &s) {
  if (s.empty()) return std::nullopt;
  // Dictionary hits first; among them keep minimal elements and pick the
  // lexicographically first for determinism.
  std::vector<std::string> hits;
  for (auto &[ty, words] : kb_.dictionaries)
    if (words.count(s)) hits.push_back(ty);
  if (!hits.empty()) {
    std::vector<std::string> minimal;
    for (auto &h : hits) {
      bool has_lower = false;
      for (auto &o : hits)
        if (o != h && user_subtype(o, h)) has_lower = true;
      if (!has_lower) minimal.push_back(h);
    }
    return *std::min_element(minimal.begin(), minimal.end());
  }
  static const char *priority[] = {"Integer", "Float", "Year",   "Month",
                                   "Day",     "Hour",  "Minute", "Second",
                                   "Date",    "Time",  "Number"};
  for (auto *b : priority)
    if (cast_builtin(s, b)) return std::string(b);
  return std::nullopt;
}

bool StaticOracle::in_geo(const std::string &entity, const std::string &kind,
                          const std::string &arg) {
  if (kind == "region") {
    auto it = kb_.geo.find(entity);
    if (it != kb_.geo.end() && it->second.region == arg) return true;
    for (auto &[country, g] : kb_.geo)
      if (g.region == arg && (g.cities.count(entity) || g.states.count(entity)))
        return true;
    return false;
  }
  if (kind == "country") {
    auto it = kb_.geo.find(arg);
    if (it == kb_.geo.end()) return false;
    return it->second.cities.count(entity) > 0 || it->second.states.count(entity) > 0;
  }
  if (kind == "state") {
    auto it = kb_.state_cities.find(arg);
    return it != kb_.state_cities.end() && it->second.count(entity) > 0;
  }
  return false;
}

std::vector<std::string> StaticOracle::extent(const std::string &tau) {
  std::set<std::string> out;
  for (auto &ty : type_and_descendants(tau))
    for (auto &w : kb_.dictionaries.at(ty)) out.insert(w);
  return {out.begin(), out.end()};
}

std::vector<std::string> StaticOracle::known_types() {
  std::vector<std::string> out = builtin_type_names();
  for (auto &[name, words] : kb_.dictionaries) out.push_back(name);
  for (auto &[child, parent] : kb_.ontology) {
    out.push_back(child);
    out.push_back(parent);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string StaticOracle::get_sketch(const std::vector<std::string> &examples) {
  std::string key = ReplayOracle::sketch_key(examples);
  auto it = kb_.sketch_table.find(key);
  if (it == kb_.sketch_table.end()) throw ReplayExhausted(key);
  int &cur = sketch_cursor_[key];
  if (cur >= (int)it->second.size()) throw ReplayExhausted(key);
  return it->second[cur++];
}

// ---------------------------------------------------------------------------

std::string ReplayOracle::sketch_key(const std::vector<std::string> &examples) {
  std::string key;
  for (size_t i = 0; i < examples.size(); i++) {
    if (i) key += '\n';
    key += examples[i];
  }
  return key;
}

ReplayOracle::ReplayOracle(std::shared_ptr<Oracle> fallback,
                           const std::string &transcript_path)
    : fallback_(std::move(fallback)) {
  std::ifstream in(transcript_path);
  if (!in) throw std::runtime_error("cannot open transcript: " + transcript_path);
  json j = json::parse(in);
  for (auto &entry : j) {
    std::string kind = entry["query_kind"].get<std::string>();
    std::string key = entry["key"].get<std::string>();
    responses_[kind + "\x1f" + key].push_back(entry["response"].get<std::string>());
  }
}

std::string ReplayOracle::get_sketch(const std::vector<std::string> &examples) {
  std::string key = "sketch\x1f" + sketch_key(examples);
  auto it = responses_.find(key);
  if (it != responses_.end()) {
    size_t &cur = cursor_[key];
    if (cur < it->second.size()) return it->second[cur++];
  }
  throw ReplayExhausted(sketch_key(examples));
}

bool ReplayOracle::has_type(const std::string &s, const std::string &tau) {
  std::string key = "has_type\x1f" + s + "\x1f" + tau;
  auto it = responses_.find(key);
  if (it != responses_.end()) {
    size_t &cur = cursor_[key];
    if (cur < it->second.size()) return it->second[cur++] == "true";
  }
  if (!fallback_) throw OracleUnavailable("no fallback for has_type replay miss");
  return fallback_->has_type(s, tau);
}

std::vector<std::pair<int, int>> ReplayOracle::typed_substrings(
    const std::string &s, const std::string &tau) {
  if (!fallback_) throw OracleUnavailable("no fallback for typed_substrings");
  return fallback_->typed_substrings(s, tau);
}

bool ReplayOracle::user_subtype(const std::string &t1, const std::string &t2) {
  if (!fallback_) throw OracleUnavailable("no fallback for user_subtype");
  return fallback_->user_subtype(t1, t2);
}

std::optional<std::string> ReplayOracle::semantic_type(const std::string &s) {
  if (!fallback_) throw OracleUnavailable("no fallback for semantic_type");
  return fallback_->semantic_type(s);
}

bool ReplayOracle::in_geo(const std::string &entity, const std::string &kind,
                          const std::string &arg) {
  if (!fallback_) throw OracleUnavailable("no fallback for in_geo");
  return fallback_->in_geo(entity, kind, arg);
}

std::vector<std::string> ReplayOracle::extent(const std::string &tau) {
  if (!fallback_) throw OracleUnavailable("no fallback for extent");
  return fallback_->extent(tau);
}

std::vector<std::string> ReplayOracle::known_types() {
  return fallback_ ? fallback_->known_types() : builtin_type_names();
}

// ---------------------------------------------------------------------------

CachedOracle::CachedOracle(std::shared_ptr<Oracle> inner, const std::string &path)
    : inner_(std::move(inner)), path_(path) {
  std::ifstream in(path_);
  if (in) {
    json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (!j.is_discarded() && j.is_object())
      for (auto &[k, v] : j.items()) cache_[k] = v.get<std::string>();
  }
}

CachedOracle::~CachedOracle() { flush(); }

void CachedOracle::flush() {
  std::lock_guard<std::mutex> lock(mu_);
  if (!dirty_ || path_.empty()) return;
  json j = json::object();
  for (auto &[k, v] : cache_) j[k] = v;
  std::ofstream out(path_);
  out << j.dump(1);
  dirty_ = false;
}

std::string CachedOracle::lookup_or_compute(const std::string &key,
                                            const std::function<std::string()> &compute) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  std::string val = compute();
  std::lock_guard<std::mutex> lock(mu_);
  cache_[key] = val;
  dirty_ = true;
  return val;
}

bool CachedOracle::has_type(const std::string &s, const std::string &tau) {
  std::string v = lookup_or_compute(
      "has_type\x1f" + s + "\x1f" + tau,
      [&] { return inner_->has_type(s, tau) ? "1" : "0"; });
  return v == "1";
}

std::vector<std::pair<int, int>> CachedOracle::typed_substrings(
    const std::string &s, const std::string &tau) {
  std::string v = lookup_or_compute("typed_substrings\x1f" + s + "\x1f" + tau, [&] {
    json arr = json::array();
    for (auto &[a, b] : inner_->typed_substrings(s, tau))
      arr.push_back(json::array({a, b}));
    return arr.dump();
  });
  std::vector<std::pair<int, int>> out;
  for (auto &p : json::parse(v)) out.emplace_back(p[0].get<int>(), p[1].get<int>());
  return out;
}

bool CachedOracle::user_subtype(const std::string &t1, const std::string &t2) {
  std::string v = lookup_or_compute(
      "user_subtype\x1f" + t1 + "\x1f" + t2,
      [&] { return inner_->user_subtype(t1, t2) ? "1" : "0"; });
  return v == "1";
}

std::string CachedOracle::get_sketch(const std::vector<std::string> &examples) {
  // Sketch queries are stateful per key (next recorded answer); do not cache.
  return inner_->get_sketch(examples);
}

std::optional<std::string> CachedOracle::semantic_type(const std::string &s) {
  std::string v = lookup_or_compute("semantic_type\x1f" + s, [&] {
    auto t = inner_->semantic_type(s);
    return t ? "+" + *t : std::string("-");
  });
  if (v == "-") return std::nullopt;
  return v.substr(1);
}

bool CachedOracle::in_geo(const std::string &entity, const std::string &kind,
                          const std::string &arg) {
  std::string v = lookup_or_compute(
      "in_geo\x1f" + entity + "\x1f" + kind + "\x1f" + arg,
      [&] { return inner_->in_geo(entity, kind, arg) ? "1" : "0"; });
  return v == "1";
}

std::vector<std::string> CachedOracle::extent(const std::string &tau) {
  std::string v = lookup_or_compute("extent\x1f" + tau, [&] {
    json arr = inner_->extent(tau);
    return arr.dump();
  });
  std::vector<std::string> out;
  for (auto &s : json::parse(v)) out.push_back(s.get<std::string>());
  return out;
}

std::vector<std::string> CachedOracle::known_types() { return inner_->known_types(); }

}  // namespace semrex
