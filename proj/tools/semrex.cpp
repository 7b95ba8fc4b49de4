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
// Command-line surface: synthesize a semantic regex from a task file, match
// or extract with a given regex, or evaluate a task corpus.
//
// Exit codes: 0 success, 1 usage or input error, 2 no solution found.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "semrex/engine.hpp"
#include "semrex/eval.hpp"
#include "semrex/oracle.hpp"
#include "semrex/sketchgen.hpp"
#include "semrex/synth.hpp"
#include "semrex/syntax.hpp"

using namespace semrex;

namespace {

struct BackendOptions {
  std::string oracle = "static";
  std::string kb_path = "assets/kb.json";
  std::string transcript;
  std::string cache;
};

void add_backend_flags(CLI::App *cmd, BackendOptions &b) {
  cmd->add_option("--oracle", b.oracle, "Oracle backend")
      ->check(CLI::IsMember({"static", "replay", "llm"}))
      ->capture_default_str();
  cmd->add_option("--kb", b.kb_path, "Knowledge-base JSON (static backend and replay fallback)")
      ->capture_default_str();
  cmd->add_option("--transcript", b.transcript, "Recorded transcript JSON (replay backend)");
  cmd->add_option("--cache", b.cache, "Persistent oracle cache file");
}

void add_synth_flags(CLI::App *cmd, SynthConfig &cfg) {
  cmd->add_option("--timeout", cfg.timeout_s, "Synthesis budget in seconds")
      ->capture_default_str();
  cmd->add_option("--max-depth", cfg.max_depth, "Completion search depth")
      ->capture_default_str();
  cmd->add_flag_callback("--no-decomp", [&cfg] { cfg.decompose_examples = false; },
                         "Disable example decomposition");
  cmd->add_flag_callback("--no-typed-holes", [&cfg] { cfg.typed_holes = false; },
                         "Ignore sketch hole type annotations");
  cmd->add_flag_callback("--no-locate-error", [&cfg] { cfg.locate_error = false; },
                         "Disable sketch repair via error localization");
  cmd->add_flag_callback("--no-type-pruning", [&cfg] { cfg.type_pruning = false; },
                         "Disable type-directed grammar pruning");
}

std::shared_ptr<Oracle> make_oracle(const BackendOptions &b) {
  std::shared_ptr<Oracle> oracle;
  if (b.oracle == "llm") {
    LiveOracleConfig cfg;
    if (const char *e = std::getenv("SEMREX_LLM_ENDPOINT")) cfg.endpoint = e;
    if (const char *k = std::getenv("SEMREX_LLM_API_KEY")) cfg.api_key = k;
    if (cfg.endpoint.empty())
      throw std::runtime_error("llm backend needs SEMREX_LLM_ENDPOINT");
    oracle = std::make_shared<LiveOracle>(cfg);
  } else {
    auto kb = StaticKnowledgeBase::from_json_file(b.kb_path);
    auto st = std::make_shared<StaticOracle>(std::move(kb));
    if (b.oracle == "replay") {
      if (b.transcript.empty())
        throw std::runtime_error("replay backend needs --transcript");
      oracle = std::make_shared<ReplayOracle>(st, b.transcript);
    } else {
      oracle = st;
    }
  }
  if (!b.cache.empty()) oracle = std::make_shared<CachedOracle>(oracle, b.cache);
  return oracle;
}

int cmd_synth(const std::string &task_path, const BackendOptions &b,
              const SynthConfig &cfg) {
  TaskFile task = TaskFile::from_json_file(task_path);
  auto oracle = make_oracle(b);
  SynthResult res = synthesize(task.train_positive, task.train_negative, oracle, cfg);
  if (!res.ok) {
    std::cerr << "no solution: " << res.reason << " (after " << res.seconds
              << "s, " << res.sketches_tried << " sketches)\n";
    return 2;
  }
  std::cout << print_regex(res.regex) << "\n";
  std::cerr << "synthesized in " << res.seconds << "s over "
            << res.sketches_tried << " sketch(es)\n";
  return 0;
}

int cmd_match(const std::string &regex_text, const std::string &input_path,
              const std::string &mode, const BackendOptions &b) {
  RegexPtr r = parse_regex(regex_text);
  auto oracle = make_oracle(b);

  std::ifstream in(input_path);
  if (!in) throw std::runtime_error("cannot open input: " + input_path);

  // The semantic-match leaves of r in print order, for extract mode.
  std::vector<const Regex *> sem_leaves;
  std::function<void(const RegexPtr &)> walk = [&](const RegexPtr &n) {
    if (!n) return;
    if (n->kind == Regex::Kind::SemMatchQ || n->kind == Regex::Kind::SemMatchB)
      sem_leaves.push_back(n.get());
    walk(n->a);
    walk(n->b);
  };
  walk(r);

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    if (mode == "filter") {
      if (matches(r, line, oracle.get())) std::cout << line << "\n";
      continue;
    }
    // Extract: every span of the line each semantic leaf accepts.
    Matcher m(r, oracle.get());
    m.bind(line);
    for (const Regex *leaf : sem_leaves)
      for (int s = 0; s < (int)line.size(); s++)
        for (int e = s + 1; e <= (int)line.size(); e++)
          if (m.match(leaf, s, e))
            std::cout << lineno << ":" << s << "-" << e << "\t"
                      << line.substr(s, e - s) << "\n";
  }
  return 0;
}

int cmd_eval(const std::string &tasks_dir, const std::string &out_path, int jobs,
             const BackendOptions &b, const SynthConfig &cfg) {
  auto tasks = load_task_dir(tasks_dir);
  EvalReport report =
      run_eval(tasks, [&b] { return make_oracle(b); }, cfg, jobs);
  std::cout << report_table(report);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write report: " + out_path);
    out << report_json(report);
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"semantic regex synthesis and matching"};
  app.require_subcommand(1);

  BackendOptions backend;
  SynthConfig cfg;

  auto *synth = app.add_subcommand("synth", "Synthesize a regex from a task file");
  std::string task_path;
  synth->add_option("--task", task_path, "Task JSON file")->required();
  add_backend_flags(synth, backend);
  add_synth_flags(synth, cfg);

  auto *match = app.add_subcommand("match", "Match lines against a regex");
  std::string regex_text, input_path, mode = "filter";
  match->add_option("--regex", regex_text, "Semantic regex")->required();
  match->add_option("--input", input_path, "File of input lines")->required();
  match->add_option("--mode", mode, "filter (matching lines) or extract (semantic spans)")
      ->check(CLI::IsMember({"filter", "extract"}))
      ->capture_default_str();
  add_backend_flags(match, backend);

  auto *eval = app.add_subcommand("eval", "Evaluate a task corpus");
  std::string tasks_dir, out_path;
  int jobs = 1;
  eval->add_option("--tasks", tasks_dir, "Directory of task JSON files")->required();
  eval->add_option("--out", out_path, "Write the JSON report here");
  eval->add_option("--jobs", jobs, "Parallel task workers")->capture_default_str();
  add_backend_flags(eval, backend);
  add_synth_flags(eval, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*synth) return cmd_synth(task_path, backend, cfg);
    if (*match) return cmd_match(regex_text, input_path, mode, backend);
    return cmd_eval(tasks_dir, out_path, jobs, backend, cfg);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
