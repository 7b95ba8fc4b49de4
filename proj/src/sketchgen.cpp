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

#include "semrex/sketchgen.hpp"

#include <algorithm>

#include "semrex/engine.hpp"
#include "semrex/syntax.hpp"

namespace semrex {

namespace {

void flatten_concat(const RegexPtr &r, std::vector<RegexPtr> &out) {
  if (r->kind == Regex::Kind::Concat) {
    flatten_concat(r->a, out);
    flatten_concat(r->b, out);
  } else {
    out.push_back(r);
  }
}

RegexPtr rebuild_concat(const std::vector<RegexPtr> &cs) {
  RegexPtr r = cs[0];
  for (size_t i = 1; i < cs.size(); i++) r = Regex::concat(r, cs[i]);
  return r;
}

// First split of e across the children: hole-bearing children become
// Any-typed probe holes (keyed by position), concrete children are widened in
// place so separators still anchor the split.
std::optional<std::vector<std::optional<std::string>>> first_split(
    const std::vector<RegexPtr> &children, const std::string &e) {
  std::vector<RegexPtr> probes;
  for (size_t i = 0; i < children.size(); i++)
    probes.push_back(is_concrete(children[i])
                         ? overapprox(children[i])
                         : Regex::hole(Ty::any(), static_cast<int>(i)));
  auto as = enumerate_assignments(rebuild_concat(probes), e, nullptr, nullptr, 64);
  if (as.empty()) return std::nullopt;
  std::vector<std::optional<std::string>> pieces(children.size());
  for (size_t i = 0; i < children.size(); i++) {
    auto it = as[0].pieces.find(static_cast<int>(i));
    if (it != as[0].pieces.end() && it->second.size() == 1)
      pieces[i] = it->second[0];
  }
  return pieces;
}

struct Localizer {
  Oracle *oracle;
  std::map<int, std::vector<std::string>> examples;
  int next_id;

  RegexPtr meta(const std::vector<std::string> &es) {
    const int id = next_id++;
    examples[id] = es;
    return Regex::meta_hole(id);
  }

  RegexPtr locate(const RegexPtr &s, const std::vector<std::string> &es) {
    if (s->kind == Regex::Kind::MetaHole) return meta(es);
    if (s->kind == Regex::Kind::Hole) {
      for (auto &e : es)
        if (!hole_type_admits(*oracle, e, s->hole_ty)) return meta(es);
      return s;
    }
    if (is_concrete(s)) {
      for (auto &e : es)
        if (!matches(s, e, oracle)) return meta(es);
      return s;
    }

    RegexPtr wide = overapprox(s);
    bool structure_ok = true;
    for (auto &e : es)
      if (!matches(wide, e)) {
        structure_ok = false;
        break;
      }
    if (!structure_ok) return structural_blame(s, es);
    return nested_blame(s, es);
  }

  // The widening rejects an example: the shape itself is wrong. Blame the one
  // child whose replacement restores matching; with no (or several) restoring
  // children the whole region collapses into a single meta-hole.
  RegexPtr structural_blame(const RegexPtr &s, const std::vector<std::string> &es) {
    if (s->kind != Regex::Kind::Concat) return meta(es);
    std::vector<RegexPtr> children;
    flatten_concat(s, children);

    std::vector<size_t> restoring;
    for (size_t i = 0; i < children.size(); i++) {
      std::vector<RegexPtr> probe;
      for (size_t j = 0; j < children.size(); j++)
        probe.push_back(j == i ? Regex::star(Regex::char_class(CharClassKind::Any))
                               : overapprox(children[j]));
      RegexPtr wide_i = rebuild_concat(probe);
      bool all = true;
      for (auto &e : es)
        if (!matches(wide_i, e)) {
          all = false;
          break;
        }
      if (all) restoring.push_back(i);
    }
    if (restoring.size() != 1) return meta(es);

    const size_t blamed = restoring[0];
    std::vector<std::string> pieces;
    for (auto &e : es) {
      std::vector<RegexPtr> wides;
      for (size_t j = 0; j < children.size(); j++)
        wides.push_back(j == blamed ? Regex::hole(Ty::any(), 0)
                                    : overapprox(children[j]));
      auto as = enumerate_assignments(rebuild_concat(wides), e, nullptr, nullptr, 64);
      if (as.empty()) return meta(es);
      auto it = as[0].pieces.find(0);
      if (it == as[0].pieces.end() || it->second.size() != 1) return meta(es);
      pieces.push_back(it->second[0]);
    }
    std::vector<RegexPtr> rebuilt = children;
    rebuilt[blamed] = locate(children[blamed], pieces);
    return rebuild_concat(rebuilt);
  }

  // The shape fits every example; the failure is below. Split the examples
  // across the children and recurse.
  RegexPtr nested_blame(const RegexPtr &s, const std::vector<std::string> &es) {
    switch (s->kind) {
      case Regex::Kind::Concat: {
        std::vector<RegexPtr> children;
        flatten_concat(s, children);
        std::vector<std::vector<std::string>> per_child(children.size());
        for (auto &e : es) {
          auto split = first_split(children, e);
          if (!split) return meta(es);
          for (size_t i = 0; i < children.size(); i++)
            if ((*split)[i]) per_child[i].push_back(*(*split)[i]);
        }
        std::vector<RegexPtr> rebuilt;
        for (size_t i = 0; i < children.size(); i++)
          rebuilt.push_back(is_concrete(children[i])
                                ? children[i]
                                : locate(children[i], per_child[i]));
        return rebuild_concat(rebuilt);
      }
      case Regex::Kind::Union: {
        std::vector<std::string> ea, eb;
        RegexPtr wa = overapprox(s->a);
        for (auto &e : es)
          (matches(wa, e) ? ea : eb).push_back(e);
        RegexPtr a = ea.empty() ? s->a : locate(s->a, ea);
        RegexPtr b = eb.empty() ? s->b : locate(s->b, eb);
        return Regex::union_(a, b);
      }
      case Regex::Kind::Inter:
        return Regex::inter(locate(s->a, es), locate(s->b, es));
      case Regex::Kind::Opt: {
        std::vector<std::string> nonempty;
        for (auto &e : es)
          if (!e.empty()) nonempty.push_back(e);
        if (nonempty.empty()) return s;
        return Regex::opt(locate(s->a, nonempty));
      }
      default:
        // Pieces of a repetition cannot be attributed; re-sketch the region.
        return meta(es);
    }
  }
};

}  // namespace

RepairSpec locate_error(const RegexPtr &failed,
                        const std::vector<std::string> &positives,
                        std::shared_ptr<Oracle> oracle) {
  int max_id = -1;
  for (auto &h : collect_holes(failed)) max_id = std::max(max_id, h->hole_id);
  Localizer loc{oracle.get(), {}, max_id + 1};
  RegexPtr out = loc.locate(failed, positives);
  if (loc.examples.empty()) {
    // Nothing localizable (e.g. the search was exhausted with every part
    // individually plausible): re-sketch the whole thing.
    loc.examples.clear();
    const int id = loc.next_id++;
    loc.examples[id] = positives;
    out = Regex::meta_hole(id);
  }
  return RepairSpec{out, loc.examples};
}

SketchStream::SketchStream(std::shared_ptr<Oracle> oracle,
                           std::vector<std::string> positives, bool allow_repair,
                           int retry_cap)
    : oracle_(std::move(oracle)),
      positives_(std::move(positives)),
      allow_repair_(allow_repair),
      retry_cap_(retry_cap) {}

RegexPtr SketchStream::pull_parse(const std::vector<std::string> &examples) {
  for (int attempt = 0; attempt < retry_cap_; attempt++) {
    const std::string raw = oracle_->get_sketch(examples);
    try {
      return parse_sketch(raw);
    } catch (const SyntaxError &) {
    } catch (const UnknownBuiltinType &) {
    }
  }
  throw ParseRetryExceeded(retry_cap_);
}

std::optional<RegexPtr> SketchStream::next(const RegexPtr &failed) {
  constexpr int kDedupAttempts = 8;
  try {
    for (int attempt = 0; attempt < kDedupAttempts; attempt++) {
      RegexPtr s;
      if (failed && allow_repair_) {
        RepairSpec spec = locate_error(failed, positives_, oracle_);
        s = spec.sketch;
        for (auto &[id, examples] : spec.meta_examples)
          s = substitute_hole(s, id, pull_parse(examples));
        s = parse_sketch(print_regex(s));  // Canonical hole renumbering.
      } else {
        s = pull_parse(positives_);
      }
      if (seen_.insert(print_regex(s)).second) return s;
    }
    end_reason_ = "sketch stream kept repeating known sketches";
  } catch (const ReplayExhausted &e) {
    end_reason_ = e.what();
  } catch (const OracleUnavailable &e) {
    end_reason_ = e.what();
  }
  return std::nullopt;
}

}  // namespace semrex
