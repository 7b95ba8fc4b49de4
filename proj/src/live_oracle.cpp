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
//
// Chat-completions HTTP backend. All prompts come from the prompts module;
// answers use the bracket-list format. Time spent waiting on the service is
// booked as oracle latency so synthesis budgets exclude it.

#include <chrono>

#include "httplib.h"
#include "json.hpp"
#include "semrex/cast.hpp"
#include "semrex/oracle.hpp"
#include "semrex/prompts.hpp"
#include "semrex/typesys.hpp"

namespace semrex {

namespace {

// Entity roots probed when classifying a string with no builtin cast.
const char *kEntityRoots[] = {"Person",  "Organization", "Place",
                              "Product", "Event",        "Work of Art",
                              "Location", "Nationality"};

std::string trim(const std::string &s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

LiveOracle::LiveOracle(LiveOracleConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.endpoint.empty())
    throw OracleUnavailable("no endpoint configured (SEMREX_LLM_ENDPOINT)");
}

std::string LiveOracle::complete(const std::string &prompt) {
  const auto start = std::chrono::steady_clock::now();
  std::string failure = "no attempt made";
  for (int attempt = 0; attempt < cfg_.max_retries; attempt++) {
    httplib::Client client(cfg_.endpoint);
    client.set_read_timeout(60, 0);
    httplib::Headers headers;
    if (!cfg_.api_key.empty())
      headers.emplace("Authorization", "Bearer " + cfg_.api_key);
    nlohmann::json body = {
        {"model", cfg_.model},
        {"max_tokens", cfg_.max_tokens},
        {"temperature", cfg_.temperature},
        {"messages",
         nlohmann::json::array({{{"role", "user"}, {"content", prompt}}})},
    };
    auto res = client.Post("/v1/chat/completions", headers, body.dump(),
                           "application/json");
    if (!res) {
      failure = "transport error: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status != 200) {
      failure = "http status " + std::to_string(res->status);
      continue;
    }
    try {
      nlohmann::json j = nlohmann::json::parse(res->body);
      std::string text =
          j.at("choices").at(0).at("message").at("content").get<std::string>();
      add_latency(std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start)
                      .count());
      return text;
    } catch (const std::exception &e) {
      failure = std::string("malformed response: ") + e.what();
    }
  }
  add_latency(std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count());
  throw OracleUnavailable(failure);
}

std::string LiveOracle::get_sketch(const std::vector<std::string> &examples) {
  std::string answer = trim(complete(build_sketch_prompt(examples)));
  // Responses mirror the demonstrations' "- <sketch>" line shape.
  if (answer.rfind("- ", 0) == 0) answer = answer.substr(2);
  return trim(answer.substr(0, answer.find('\n')));
}

std::vector<std::pair<int, int>> LiveOracle::typed_substrings(
    const std::string &s, const std::string &tau) {
  std::string answer = complete(build_typing_prompt(s, tau));
  std::vector<std::pair<int, int>> spans;
  for (auto &piece : parse_bracket_list(answer)) {
    // Every occurrence of the reported substring.
    for (size_t at = s.find(piece); at != std::string::npos;
         at = s.find(piece, at + 1))
      spans.emplace_back((int)at, (int)(at + piece.size()));
  }
  std::sort(spans.begin(), spans.end());
  spans.erase(std::unique(spans.begin(), spans.end()), spans.end());
  return spans;
}

bool LiveOracle::has_type(const std::string &s, const std::string &tau) {
  if (is_syntactic_builtin(tau)) return cast_builtin(s, tau).has_value();
  const int n = (int)s.size();
  for (auto &[b, e] : typed_substrings(s, tau))
    if (b == 0 && e == n) return true;
  return false;
}

std::optional<std::string> LiveOracle::semantic_type(const std::string &s) {
  auto builtins = builtin_cast_types(s);
  if (!builtins.empty()) return builtins.front();
  for (const char *root : kEntityRoots)
    if (has_type(s, root)) return std::string(root);
  return std::nullopt;
}

bool LiveOracle::user_subtype(const std::string &t1, const std::string &t2) {
  std::string answer = trim(complete(
      "Is every " + t1 + " also a " + t2 + "? Answer yes or no.\nAnswer:"));
  return !answer.empty() && (answer[0] == 'y' || answer[0] == 'Y');
}

bool LiveOracle::in_geo(const std::string &entity, const std::string &kind,
                        const std::string &arg) {
  std::string answer = trim(complete("Is " + entity + " located in the " + kind +
                                     " " + arg + "? Answer yes or no.\nAnswer:"));
  return !answer.empty() && (answer[0] == 'y' || answer[0] == 'Y');
}

std::vector<std::string> LiveOracle::extent(const std::string &) {
  return {};  // A live model has no enumerable extent.
}

}  // namespace semrex
