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

#ifndef SEMREX_EVAL_HPP
#define SEMREX_EVAL_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semrex/ast.hpp"
#include "semrex/oracle.hpp"
#include "semrex/synth.hpp"

namespace semrex {

// One labeled test string of a task.
struct TaskCase {
  std::string text;
  bool label = false;
};

// A benchmark task: training examples plus a labeled test set.
// JSON shape: {"name": ..., "train_positive": [...], "train_negative": [...],
//              "test": [{"text": ..., "label": true|false}, ...]}.
struct TaskFile {
  std::string name;
  std::vector<std::string> train_positive;
  std::vector<std::string> train_negative;
  std::vector<TaskCase> test;

  static TaskFile from_json_text(const std::string &text);
  static TaskFile from_json_file(const std::string &path);
};

// All *.json files of a directory, sorted by file name.
std::vector<TaskFile> load_task_dir(const std::string &dir);

// Classification quality of r on a labeled test set (full-string matching).
// Precision and recall default to 0 when their denominator is empty; f1 is
// absent (reported as undefined) when precision + recall = 0.
struct Metrics {
  double precision = 0;
  double recall = 0;
  std::optional<double> f1;
};
Metrics score(const RegexPtr &r, const std::vector<TaskCase> &test,
              Oracle *oracle);

struct TaskReport {
  std::string name;
  bool finished = false;
  std::string regex_text;  // Printed result when finished.
  std::string reason;      // Failure reason otherwise.
  Metrics metrics;         // Meaningful only when finished.
  double synth_time_s = 0;
};

struct EvalReport {
  std::vector<TaskReport> tasks;  // In task-name order.
  int finished_count = 0;
  // Means over finished tasks; mean_f1 over finished tasks with defined f1.
  double mean_precision = 0;
  double mean_recall = 0;
  std::optional<double> mean_f1;
  double mean_synth_time_s = 0;
};

// Synthesizes every task and scores the result on its test set. Each worker
// gets its own oracle from the factory; task failures are recorded, never
// fatal. The report order is deterministic regardless of jobs.
EvalReport run_eval(const std::vector<TaskFile> &tasks,
                    const std::function<std::shared_ptr<Oracle>()> &make_oracle,
                    const SynthConfig &cfg = {}, int jobs = 1);

// Serializations. The JSON form is stable field-ordered; with_timing=false
// omits the wall-clock fields so replayed runs compare byte-identical.
std::string report_json(const EvalReport &report, bool with_timing = true);
std::string report_table(const EvalReport &report);

}  // namespace semrex

#endif
