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

#include "semrex/eval.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "semrex/engine.hpp"
#include "semrex/syntax.hpp"

namespace semrex {

TaskFile TaskFile::from_json_text(const std::string &text) {
  nlohmann::json j = nlohmann::json::parse(text);
  TaskFile t;
  t.name = j.at("name").get<std::string>();
  for (auto &s : j.at("train_positive")) t.train_positive.push_back(s.get<std::string>());
  for (auto &s : j.at("train_negative")) t.train_negative.push_back(s.get<std::string>());
  for (auto &c : j.at("test"))
    t.test.push_back({c.at("text").get<std::string>(), c.at("label").get<bool>()});

  std::set<std::string> pos(t.train_positive.begin(), t.train_positive.end());
  for (auto &n : t.train_negative)
    if (pos.count(n))
      throw std::invalid_argument("task " + t.name +
                                  ": training lists overlap on \"" + n + "\"");
  return t;
}

TaskFile TaskFile::from_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open task file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

std::vector<TaskFile> load_task_dir(const std::string &dir) {
  std::vector<std::string> paths;
  for (auto &entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      paths.push_back(entry.path().string());
  std::sort(paths.begin(), paths.end());
  std::vector<TaskFile> tasks;
  for (auto &p : paths) tasks.push_back(TaskFile::from_json_file(p));
  return tasks;
}

Metrics score(const RegexPtr &r, const std::vector<TaskCase> &test,
              Oracle *oracle) {
  int tp = 0, fp = 0, fn = 0;
  for (auto &c : test) {
    const bool predicted = matches(r, c.text, oracle);
    if (predicted && c.label) tp++;
    if (predicted && !c.label) fp++;
    if (!predicted && c.label) fn++;
  }
  Metrics m;
  if (tp + fp > 0) m.precision = double(tp) / (tp + fp);
  if (tp + fn > 0) m.recall = double(tp) / (tp + fn);
  if (m.precision + m.recall > 0)
    m.f1 = 2 * m.precision * m.recall / (m.precision + m.recall);
  return m;
}

EvalReport run_eval(const std::vector<TaskFile> &tasks,
                    const std::function<std::shared_ptr<Oracle>()> &make_oracle,
                    const SynthConfig &cfg, int jobs) {
  EvalReport report;
  report.tasks.resize(tasks.size());

  std::atomic<size_t> next{0};
  auto worker = [&] {
    auto oracle = make_oracle();
    for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
      const TaskFile &t = tasks[i];
      TaskReport &out = report.tasks[i];
      out.name = t.name;
      try {
        SynthResult res =
            synthesize(t.train_positive, t.train_negative, oracle, cfg);
        out.synth_time_s = res.seconds;
        if (res.ok) {
          out.finished = true;
          out.regex_text = print_regex(res.regex);
          out.metrics = score(res.regex, t.test, oracle.get());
        } else {
          out.reason = res.reason;
        }
      } catch (const std::exception &e) {
        out.reason = e.what();
      }
    }
  };

  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < jobs; k++) pool.emplace_back(worker);
    for (auto &th : pool) th.join();
  }

  std::sort(report.tasks.begin(), report.tasks.end(),
            [](const TaskReport &a, const TaskReport &b) { return a.name < b.name; });

  double f1_sum = 0;
  int f1_n = 0;
  for (auto &t : report.tasks) {
    if (!t.finished) continue;
    report.finished_count++;
    report.mean_precision += t.metrics.precision;
    report.mean_recall += t.metrics.recall;
    report.mean_synth_time_s += t.synth_time_s;
    if (t.metrics.f1) {
      f1_sum += *t.metrics.f1;
      f1_n++;
    }
  }
  if (report.finished_count > 0) {
    report.mean_precision /= report.finished_count;
    report.mean_recall /= report.finished_count;
    report.mean_synth_time_s /= report.finished_count;
  }
  if (f1_n > 0) report.mean_f1 = f1_sum / f1_n;
  return report;
}

std::string report_json(const EvalReport &report, bool with_timing) {
  nlohmann::ordered_json j;
  j["tasks"] = nlohmann::ordered_json::array();
  for (auto &t : report.tasks) {
    nlohmann::ordered_json e;
    e["name"] = t.name;
    e["finished"] = t.finished;
    if (t.finished) {
      e["regex"] = t.regex_text;
      e["precision"] = t.metrics.precision;
      e["recall"] = t.metrics.recall;
      if (t.metrics.f1)
        e["f1"] = *t.metrics.f1;
      else
        e["f1"] = "undefined";
    } else {
      e["reason"] = t.reason;
    }
    if (with_timing) e["synth_time_s"] = t.synth_time_s;
    j["tasks"].push_back(std::move(e));
  }
  j["finished"] = report.finished_count;
  j["total"] = static_cast<int>(report.tasks.size());
  j["mean_precision"] = report.mean_precision;
  j["mean_recall"] = report.mean_recall;
  if (report.mean_f1)
    j["mean_f1"] = *report.mean_f1;
  else
    j["mean_f1"] = "undefined";
  if (with_timing) j["mean_synth_time_s"] = report.mean_synth_time_s;
  return j.dump(2) + "\n";
}

std::string report_table(const EvalReport &report) {
  std::ostringstream out;
  size_t w = 4;
  for (auto &t : report.tasks) w = std::max(w, t.name.size());
  auto num = [](std::optional<double> v) {
    if (!v) return std::string("   n/a");
    char buf[16];
    std::snprintf(buf, sizeof buf, "%6.3f", *v);
    return std::string(buf);
  };
  out << std::string(w - 4, ' ') << "task  done       P       R      F1    time\n";
  for (auto &t : report.tasks) {
    out << std::string(w - t.name.size(), ' ') << t.name << "  "
        << (t.finished ? " yes" : "  no");
    if (t.finished)
      out << "  " << num(t.metrics.precision) << "  " << num(t.metrics.recall)
          << "  " << num(t.metrics.f1);
    else
      out << "     n/a     n/a     n/a";
    char buf[16];
    std::snprintf(buf, sizeof buf, "%5.2fs", t.synth_time_s);
    out << "  " << buf << "\n";
    if (!t.finished && !t.reason.empty())
      out << std::string(w, ' ') << "  (" << t.reason << ")\n";
  }
  out << "finished " << report.finished_count << "/" << report.tasks.size()
      << "  mean P " << num(report.mean_precision) << "  mean R "
      << num(report.mean_recall) << "  mean F1 " << num(report.mean_f1) << "\n";
  return out.str();
}

}  // namespace semrex
