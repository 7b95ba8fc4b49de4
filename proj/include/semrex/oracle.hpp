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

#ifndef SEMREX_ORACLE_HPP
#define SEMREX_ORACLE_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "semrex/ty.hpp"

namespace semrex {

struct OracleUnavailable : std::runtime_error {
  explicit OracleUnavailable(const std::string &why)
      : std::runtime_error("oracle unavailable: " + why) {}
};

struct ReplayExhausted : std::runtime_error {
  explicit ReplayExhausted(const std::string &key)
      : std::runtime_error("replay transcript exhausted for key: " + key) {}
};

// The semantic oracle: type membership, typed-substring extraction, user-type
// subtyping, and sketch generation. Backends must answer deterministically
// except the live one.
class Oracle {
 public:
  virtual ~Oracle() = default;

  virtual bool has_type(const std::string &s, const std::string &tau) = 0;
  virtual std::vector<std::pair<int, int>> typed_substrings(const std::string &s,
                                                            const std::string &tau) = 0;
  virtual bool user_subtype(const std::string &t1, const std::string &t2) = 0;
  virtual std::string get_sketch(const std::vector<std::string> &examples) = 0;

  // Best single semantic name for s, or nullopt when s is plain CharSeq.
  virtual std::optional<std::string> semantic_type(const std::string &s) = 0;

  // Geo membership for the in/inRegion/inCountry/inState predicates.
  // kind is "region", "country" or "state".
  virtual bool in_geo(const std::string &entity, const std::string &kind,
                      const std::string &arg) = 0;

  // All strings s' of type tau (and subtypes) with an enumerable extent;
  // used to invert toUpper/abbreviate on dictionary-backed types. Types with
  // no enumerable extent return an empty list.
  virtual std::vector<std::string> extent(const std::string &tau) = 0;

  // Every type name this backend can answer membership queries for (built-in
  // names plus backend-specific user types); drives candidate enumeration.
  virtual std::vector<std::string> known_types();

  // Cumulative time spent waiting on external services, excluded from
  // synthesis budgets.
  double latency_seconds() const { return latency_; }
  void add_latency(double s) { latency_ += s; }

 protected:
  double latency_ = 0;
};

// Does hole type tau admit e per the decomposition rules (Hole-Feasible)?
// The SemanticType(e) ⊑ tau condition is read as membership in tau; an
// empty string vacuously satisfies Optional types.
bool hole_type_admits(Oracle &oracle, const std::string &e, const Ty &tau);

struct StaticKnowledgeBase {
  std::map<std::string, std::set<std::string>> dictionaries;
  std::vector<std::pair<std::string, std::string>> ontology;  // (child, parent)
  struct GeoEntry {
    std::string region;
    std::set<std::string> cities;
    std::set<std::string> states;
  };
  std::map<std::string, GeoEntry> geo;                          // country -> entry
  std::map<std::string, std::set<std::string>> state_cities;    // state -> cities
  std::map<std::string, std::vector<std::string>> sketch_table; // scripted sketches

  static StaticKnowledgeBase from_json_file(const std::string &path);
  static StaticKnowledgeBase from_json_text(const std::string &text);
};

class StaticOracle : public Oracle {
 public:
  explicit StaticOracle(StaticKnowledgeBase kb);

  bool has_type(const std::string &s, const std::string &tau) override;
  std::vector<std::pair<int, int>> typed_substrings(const std::string &s,
                                                    const std::string &tau) override;
  bool user_subtype(const std::string &t1, const std::string &t2) override;
  std::string get_sketch(const std::vector<std::string> &examples) override;
  std::optional<std::string> semantic_type(const std::string &s) override;
  bool in_geo(const std::string &entity, const std::string &kind,
              const std::string &arg) override;
  std::vector<std::string> extent(const std::string &tau) override;
  std::vector<std::string> known_types() override;

  const StaticKnowledgeBase &kb() const { return kb_; }

 private:
  // tau plus every dictionary type below it (ontology + built-in forest).
  std::vector<std::string> type_and_descendants(const std::string &tau) const;

  StaticKnowledgeBase kb_;
  std::map<std::string, int> sketch_cursor_;
};

// Answers typing queries from a wrapped fallback oracle and get_sketch from a
// recorded transcript (entries consumed in order per key).
class ReplayOracle : public Oracle {
 public:
  ReplayOracle(std::shared_ptr<Oracle> fallback, const std::string &transcript_path);
  static std::string sketch_key(const std::vector<std::string> &examples);

  bool has_type(const std::string &s, const std::string &tau) override;
  std::vector<std::pair<int, int>> typed_substrings(const std::string &s,
                                                    const std::string &tau) override;
  bool user_subtype(const std::string &t1, const std::string &t2) override;
  std::string get_sketch(const std::vector<std::string> &examples) override;
  std::optional<std::string> semantic_type(const std::string &s) override;
  bool in_geo(const std::string &entity, const std::string &kind,
              const std::string &arg) override;
  std::vector<std::string> extent(const std::string &tau) override;
  std::vector<std::string> known_types() override;

 private:
  std::shared_ptr<Oracle> fallback_;
  std::map<std::string, std::vector<std::string>> responses_;  // key -> queue
  std::map<std::string, size_t> cursor_;
};

// Persistent JSON cache wrapper; transparent w.r.t. answers.
class CachedOracle : public Oracle {
 public:
  CachedOracle(std::shared_ptr<Oracle> inner, const std::string &cache_path);
  ~CachedOracle() override;

  bool has_type(const std::string &s, const std::string &tau) override;
  std::vector<std::pair<int, int>> typed_substrings(const std::string &s,
                                                    const std::string &tau) override;
  bool user_subtype(const std::string &t1, const std::string &t2) override;
  std::string get_sketch(const std::vector<std::string> &examples) override;
  std::optional<std::string> semantic_type(const std::string &s) override;
  bool in_geo(const std::string &entity, const std::string &kind,
              const std::string &arg) override;
  std::vector<std::string> extent(const std::string &tau) override;
  std::vector<std::string> known_types() override;

  void flush();

 private:
  std::string lookup_or_compute(const std::string &key,
                                const std::function<std::string()> &compute);

  std::shared_ptr<Oracle> inner_;
  std::string path_;
  std::map<std::string, std::string> cache_;
  std::mutex mu_;
  bool dirty_ = false;
};

struct LiveOracleConfig {
  std::string endpoint;  // from SEMREX_LLM_ENDPOINT
  std::string api_key;   // from SEMREX_LLM_API_KEY
  std::string model = "gpt-3.5-turbo";
  int max_tokens = 256;
  double temperature = 0.0;
  int max_retries = 3;
};

// Chat/completions-style HTTP backend; builds the verbatim prompt templates
// and parses the bracket-list answer format. Entity types are decided by
// full-span membership in typed_substrings.
class LiveOracle : public Oracle {
 public:
  explicit LiveOracle(LiveOracleConfig cfg);

  bool has_type(const std::string &s, const std::string &tau) override;
  std::vector<std::pair<int, int>> typed_substrings(const std::string &s,
                                                    const std::string &tau) override;
  bool user_subtype(const std::string &t1, const std::string &t2) override;
  std::string get_sketch(const std::vector<std::string> &examples) override;
  std::optional<std::string> semantic_type(const std::string &s) override;
  bool in_geo(const std::string &entity, const std::string &kind,
              const std::string &arg) override;
  std::vector<std::string> extent(const std::string &tau) override;

 private:
  std::string complete(const std::string &prompt);

  LiveOracleConfig cfg_;
};

}  // namespace semrex

#endif
