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

#include "semrex/synth.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "semrex/engine.hpp"
#include "semrex/grammar.hpp"
#include "semrex/sketchgen.hpp"
#include "semrex/syntax.hpp"
#include "semrex/typesys.hpp"

namespace semrex {

namespace {

// ---------------------------------------------------------------------------
// Span tables.
//
// Every candidate carries one bit per span of every observation string
// (positive pieces plus relevant strings). Compositions are computed directly
// on the parents' tables, the oracle is only consulted for leaves, and two
// candidates with identical tables are observationally equivalent on
// everything the search can ask about them.

using Bits = std::vector<uint64_t>;

struct SpanCtx {
  std::vector<std::string> strings;  // Deduplicated; positives first.
  size_t n_pos = 0;                  // How many entries must fully match.
  std::vector<size_t> offset;        // Bit offset of each string's table.
  size_t total_bits = 0;
  std::vector<size_t> rel_idx;       // strings index per relevant string.

  size_t span_bit(size_t i, int b, int e) const {
    const size_t w = strings[i].size() + 1;
    return offset[i] + static_cast<size_t>(b) * w + static_cast<size_t>(e);
  }
  size_t full_bit(size_t i) const {
    return span_bit(i, 0, static_cast<int>(strings[i].size()));
  }
};

bool get_bit(const Bits &bits, size_t i) {
  return (bits[i >> 6] >> (i & 63)) & 1;
}
void set_bit(Bits &bits, size_t i) { bits[i >> 6] |= uint64_t{1} << (i & 63); }

Bits zero_bits(const SpanCtx &ctx) { return Bits((ctx.total_bits + 63) / 64, 0); }

SpanCtx make_ctx(const std::vector<std::string> &positives,
                 const std::vector<std::string> &relevant) {
  SpanCtx ctx;
  auto add = [&](const std::string &s) -> size_t {
    for (size_t i = 0; i < ctx.strings.size(); i++)
      if (ctx.strings[i] == s) return i;
    ctx.strings.push_back(s);
    return ctx.strings.size() - 1;
  };
  for (auto &p : positives) add(p);
  ctx.n_pos = ctx.strings.size();
  for (auto &r : relevant) ctx.rel_idx.push_back(add(r));
  size_t off = 0;
  for (auto &s : ctx.strings) {
    ctx.offset.push_back(off);
    off += (s.size() + 1) * (s.size() + 1);
  }
  ctx.total_bits = off;
  return ctx;
}

Bits leaf_bits(const SpanCtx &ctx, const RegexPtr &r, Oracle *oracle) {
  Bits bits = zero_bits(ctx);
  Matcher m(r, oracle);
  for (size_t i = 0; i < ctx.strings.size(); i++) {
    m.bind(ctx.strings[i]);
    const int n = static_cast<int>(ctx.strings[i].size());
    for (int b = 0; b <= n; b++)
      for (int e = b; e <= n; e++)
        if (m.match(r.get(), b, e)) set_bit(bits, ctx.span_bit(i, b, e));
  }
  return bits;
}

Bits or_bits(const Bits &a, const Bits &b) {
  Bits out = a;
  for (size_t i = 0; i < out.size(); i++) out[i] |= b[i];
  return out;
}

Bits and_bits(const Bits &a, const Bits &b) {
  Bits out = a;
  for (size_t i = 0; i < out.size(); i++) out[i] &= b[i];
  return out;
}

Bits opt_bits(const SpanCtx &ctx, const Bits &a) {
  Bits out = a;
  for (size_t i = 0; i < ctx.strings.size(); i++)
    for (int b = 0; b <= static_cast<int>(ctx.strings[i].size()); b++)
      set_bit(out, ctx.span_bit(i, b, b));
  return out;
}

Bits concat_bits(const SpanCtx &ctx, const Bits &a, const Bits &b) {
  Bits out = zero_bits(ctx);
  for (size_t i = 0; i < ctx.strings.size(); i++) {
    const int n = static_cast<int>(ctx.strings[i].size());
    for (int x = 0; x <= n; x++)
      for (int e = x; e <= n; e++)
        for (int m = x; m <= e; m++)
          if (get_bit(a, ctx.span_bit(i, x, m)) &&
              get_bit(b, ctx.span_bit(i, m, e))) {
            set_bit(out, ctx.span_bit(i, x, e));
            break;
          }
  }
  return out;
}

Bits star_bits(const SpanCtx &ctx, const Bits &a) {
  Bits out = zero_bits(ctx);
  for (size_t i = 0; i < ctx.strings.size(); i++) {
    const int n = static_cast<int>(ctx.strings[i].size());
    for (int b = 0; b <= n; b++) set_bit(out, ctx.span_bit(i, b, b));
    for (int len = 1; len <= n; len++)
      for (int b = 0; b + len <= n; b++) {
        const int e = b + len;
        for (int m = b + 1; m <= e; m++)
          if (get_bit(a, ctx.span_bit(i, b, m)) &&
              get_bit(out, ctx.span_bit(i, m, e))) {
            set_bit(out, ctx.span_bit(i, b, e));
            break;
          }
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ranked candidate pools.

struct Cand {
  RegexPtr r;
  Ty ty;
  int depth = 1;
  int h = 1, n = 1;
  std::string printed;
  Bits bits;
};

bool rank_less(const Cand &a, const Cand &b) {
  if (a.h != b.h) return a.h < b.h;
  if (a.n != b.n) return a.n < b.n;
  return a.printed < b.printed;
}

struct Enumerator {
  const SpanCtx &ctx;
  const SynthConfig &cfg;
  Oracle *oracle;
  Ty goal;

  std::vector<std::vector<Cand>> general;  // By depth; index 0 unused.
  std::vector<std::vector<Cand>> typed;    // Semantic-goal restricted pools.
  // Behavioral dedup is keyed on (type, span table): two candidates with the
  // same bits but different types are not interchangeable, because the final
  // hole-type filter may keep one and reject the other.
  std::set<std::pair<std::string, Bits>> seen_general, seen_typed;
  bool semantic_goal = false;

  Cand make(RegexPtr r, int depth, Bits bits) const {
    Cand c;
    c.r = std::move(r);
    c.ty = type_of(c.r, oracle);
    c.depth = depth;
    c.h = height(c.r);
    c.n = node_count(c.r);
    c.printed = print_regex(c.r);
    c.bits = std::move(bits);
    return c;
  }

  // Sort, behavior-dedup against the pool family's seen map, cap.
  // Sort, behavior-dedup against the pool family's seen set, cap. Leaf pools
  // are never capped: they are the grammar's alphabet, and dropping a leaf
  // would silently shrink the reachable language (composition work is bounded
  // separately by compose_cap).
  std::vector<Cand> settle(std::vector<Cand> raw,
                           std::set<std::pair<std::string, Bits>> &seen,
                           bool cap = true) {
    std::sort(raw.begin(), raw.end(), rank_less);
    std::vector<Cand> out;
    for (auto &c : raw) {
      if (c.ty.is_no_type()) continue;  // Uninhabited meet: dead language.
      if (!seen.emplace(print_ty(c.ty), c.bits).second) continue;
      out.push_back(std::move(c));
      if (cap && out.size() >= cfg.pool_cap) break;
    }
    return out;
  }

  void build() {
    semantic_goal = cfg.type_pruning && goal.stripped().is_semantic();
    const std::vector<std::string> pos(ctx.strings.begin(),
                                       ctx.strings.begin() + ctx.n_pos);
    const std::vector<std::string> rel(ctx.strings.begin() + ctx.n_pos,
                                       ctx.strings.end());
    GrammarSlice slice = make_slice(*oracle, goal, pos, rel, cfg.type_pruning);

    std::vector<Cand> leaves;
    for (auto &r : leaf_productions(slice))
      leaves.push_back(make(r, 1, leaf_bits(ctx, r, oracle)));

    general.assign(static_cast<size_t>(cfg.max_depth) + 1, {});
    typed.assign(static_cast<size_t>(cfg.max_depth) + 1, {});

    // The general family is needed up to max_depth in unrestricted mode and
    // up to max_depth-1 in semantic-goal mode (as intersection operands).
    const int gen_depth = semantic_goal ? cfg.max_depth - 1 : cfg.max_depth;

    if (gen_depth >= 1) general[1] = settle(leaves, seen_general, false);
    if (semantic_goal) {
      std::vector<Cand> t;
      for (auto &c : leaves)
        if (subtype(c.ty, goal, oracle)) t.push_back(c);
      typed[1] = settle(std::move(t), seen_typed, false);
    }

    for (int d = 2; d <= cfg.max_depth; d++) {
      if (d <= gen_depth) general[d] = settle(compose_general(d), seen_general);
      if (semantic_goal) typed[d] = settle(compose_typed(d), seen_typed);
    }
  }

  // All members of the pools below depth d within one family.
  std::vector<const Cand *> below(const std::vector<std::vector<Cand>> &fam,
                                  int d) const {
    std::vector<const Cand *> out;
    for (int k = 1; k < d && k < static_cast<int>(fam.size()); k++)
      for (auto &c : fam[k]) out.push_back(&c);
    return out;
  }

  std::vector<Cand> compose_general(int d) {
    std::vector<Cand> raw;
    size_t attempts = 0;
    auto cum = below(general, d);
    auto budget_ok = [&] { return attempts++ < cfg.compose_cap; };

    for (auto *x : cum) {
      if (x->depth != d - 1) {
        // Unary productions only advance from the previous level.
      } else {
        if (!budget_ok()) return raw;
        raw.push_back(make(Regex::opt(x->r), d, opt_bits(ctx, x->bits)));
        if (!budget_ok()) return raw;
        Bits st = star_bits(ctx, x->bits);
        raw.push_back(make(Regex::plus(x->r), d, concat_bits(ctx, x->bits, st)));
        if (!budget_ok()) return raw;
        raw.push_back(make(Regex::star(x->r), d, std::move(st)));
      }
    }
    for (size_t i = 0; i < cum.size(); i++)
      for (size_t j = 0; j < cum.size(); j++) {
        const Cand *x = cum[i], *y = cum[j];
        if (std::max(x->depth, y->depth) != d - 1) continue;
        if (!budget_ok()) return raw;
        raw.push_back(make(Regex::concat(x->r, y->r), d,
                           concat_bits(ctx, x->bits, y->bits)));
        if (j >= i) {
          if (valid_union_operand(x->r) && valid_union_operand(y->r)) {
            if (!budget_ok()) return raw;
            raw.push_back(
                make(Regex::union_(x->r, y->r), d, or_bits(x->bits, y->bits)));
          }
          if (!budget_ok()) return raw;
          raw.push_back(
              make(Regex::inter(x->r, y->r), d, and_bits(x->bits, y->bits)));
        }
      }
    return raw;
  }

  std::vector<Cand> compose_typed(int d) {
    std::vector<Cand> raw;
    size_t attempts = 0;
    auto budget_ok = [&] { return attempts++ < cfg.compose_cap; };
    auto tg = below(typed, d);

    // Intersection operands: everything already enumerated, either family.
    std::vector<const Cand *> operands = tg;
    {
      std::set<Bits> have;
      for (auto *c : tg) have.insert(c->bits);
      for (auto *c : below(general, d))
        if (have.insert(c->bits).second) operands.push_back(c);
    }

    if (goal.optional)
      for (auto *x : tg) {
        if (x->depth != d - 1) continue;
        if (!budget_ok()) return raw;
        raw.push_back(make(Regex::opt(x->r), d, opt_bits(ctx, x->bits)));
      }
    for (size_t i = 0; i < tg.size(); i++)
      for (size_t j = i; j < tg.size(); j++) {
        if (std::max(tg[i]->depth, tg[j]->depth) != d - 1) continue;
        if (!valid_union_operand(tg[i]->r) || !valid_union_operand(tg[j]->r))
          continue;
        if (!budget_ok()) return raw;
        raw.push_back(make(Regex::union_(tg[i]->r, tg[j]->r), d,
                           or_bits(tg[i]->bits, tg[j]->bits)));
      }
    for (auto *x : tg)
      for (auto *y : operands) {
        if (std::max(x->depth, y->depth) != d - 1) continue;
        if (!budget_ok()) return raw;
        raw.push_back(
            make(Regex::inter(x->r, y->r), d, and_bits(x->bits, y->bits)));
      }
    return raw;
  }

  // Every pool candidate this hole may be completed with, rank-ordered.
  std::vector<const Cand *> yield_order() const {
    std::vector<const Cand *> all;
    for (auto &pool : typed)
      for (auto &c : pool) all.push_back(&c);
    for (auto &pool : general)
      for (auto &c : pool) all.push_back(&c);
    std::sort(all.begin(), all.end(),
              [](const Cand *a, const Cand *b) { return rank_less(*a, *b); });
    return all;
  }
};

}  // namespace

std::vector<Completion> get_next_completion(std::shared_ptr<Oracle> oracle,
                                            const Ty &hole_ty,
                                            const std::vector<std::string> &positives,
                                            const std::vector<std::string> &relevant,
                                            const SynthConfig &cfg) {
  if (!oracle) throw std::invalid_argument("completion enumeration needs an oracle");
  // Memoize oracle answers for the duration of this enumeration; leaf tables
  // ask the same membership question for many overlapping spans.
  auto memo = std::make_shared<CachedOracle>(oracle, "");

  SpanCtx ctx = make_ctx(positives, relevant);
  Enumerator en{ctx, cfg, memo.get(), hole_ty, {}, {}, {}, {}, false};
  en.build();

  std::vector<Completion> out;
  std::set<std::vector<bool>> sigs;
  std::set<Bits> seen;  // The two families may overlap behaviorally.
  for (const Cand *c : en.yield_order()) {
    if (!subtype(c->ty, hole_ty, memo.get())) continue;
    bool all_pos = true;
    for (size_t i = 0; i < ctx.n_pos && all_pos; i++)
      all_pos = get_bit(c->bits, ctx.full_bit(i));
    if (!all_pos) continue;
    if (!seen.insert(c->bits).second) continue;
    std::vector<bool> rej;
    rej.reserve(ctx.rel_idx.size());
    for (size_t k : ctx.rel_idx)
      rej.push_back(!get_bit(c->bits, ctx.full_bit(k)));
    if (cfg.dedup_completions && !sigs.insert(rej).second) continue;
    Completion comp;
    comp.regex = c->r;
    comp.rejects = std::move(rej);
    comp.height = c->h;
    comp.nodes = c->n;
    comp.printed = c->printed;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::string> relevant_substrings(const RegexPtr &sketch, int hole_id,
                                             const std::vector<std::string> &negatives,
                                             std::shared_ptr<Oracle> oracle,
                                             size_t cap) {
  (void)oracle;  // The widened sketch has no semantic parts left.
  RegexPtr wide = widen_keep_holes(sketch);
  std::vector<std::string> out;
  std::set<std::string> dedup;
  for (auto &e : negatives) {
    for (auto &a : enumerate_assignments(wide, e, nullptr, nullptr, cap)) {
      auto it = a.pieces.find(hole_id);
      if (it == a.pieces.end()) continue;
      for (auto &piece : it->second)
        if (dedup.insert(piece).second) out.push_back(piece);
    }
  }
  return out;
}

RegexPtr instantiate(const RegexPtr &sketch, const HoleSolution &sol) {
  RegexPtr r = sketch;
  for (auto &[id, fill] : sol.fills) r = substitute_hole(r, id, fill);
  return r;
}

std::optional<HoleSolution> synthesize_from_decomp(
    const RegexPtr &sketch, const Decomp &psi,
    const std::vector<std::string> &positives,
    const std::vector<std::string> &negatives, std::shared_ptr<Oracle> oracle,
    const SynthConfig &cfg, const Budget *budget) {
  auto holes = collect_holes(sketch);
  std::vector<int> ids;
  for (auto &h : holes) {
    if (h->kind == Regex::Kind::MetaHole) return std::nullopt;
    ids.push_back(h->hole_id);
  }

  std::vector<std::vector<Completion>> streams;
  for (auto &h : holes) {
    std::vector<std::string> pos_h;
    auto it = psi.assignment.find(h->hole_id);
    if (it != psi.assignment.end())
      for (auto &lists : it->second)
        for (auto &piece : lists) pos_h.push_back(piece);
    auto rel_h = relevant_substrings(sketch, h->hole_id, negatives, oracle);
    auto comp = get_next_completion(oracle, h->hole_ty, pos_h, rel_h, cfg);
    if (comp.empty()) return std::nullopt;
    streams.push_back(std::move(comp));
  }

  auto assemble = [&](const std::vector<size_t> &ord) {
    RegexPtr r = sketch;
    for (size_t k = 0; k < ids.size(); k++)
      r = substitute_hole(r, ids[k], streams[k][ord[k]].regex);
    return r;
  };

  // Frontier ordered by (ordinal sum, printed instantiation); the ordinal sum
  // is monotone along successors, so states pop in cost order.
  using State = std::tuple<size_t, std::string, std::vector<size_t>>;
  std::set<State> frontier;
  std::set<std::vector<size_t>> visited;
  {
    std::vector<size_t> zero(ids.size(), 0);
    frontier.emplace(0, print_regex(assemble(zero)), zero);
    visited.insert(zero);
  }

  while (!frontier.empty()) {
    if (budget && budget->exceeded()) return std::nullopt;
    auto [cost, printed, ord] = *frontier.begin();
    frontier.erase(frontier.begin());

    RegexPtr r = assemble(ord);
    bool ok = true;
    for (auto &p : positives)
      if (!matches(r, p, oracle.get())) {
        ok = false;
        break;
      }
    if (ok)
      for (auto &n : negatives)
        if (matches(r, n, oracle.get())) {
          ok = false;
          break;
        }
    if (ok) {
      HoleSolution sol;
      for (size_t k = 0; k < ids.size(); k++)
        sol.fills[ids[k]] = streams[k][ord[k]].regex;
      return sol;
    }

    for (size_t k = 0; k < ids.size(); k++) {
      auto next = ord;
      next[k]++;
      if (next[k] >= streams[k].size()) continue;
      if (!visited.insert(next).second) continue;
      frontier.emplace(cost + 1, print_regex(assemble(next)), next);
    }
    if (ids.empty()) break;  // Concrete sketch: the single state was it.
  }
  return std::nullopt;
}

SynthResult synthesize(const std::vector<std::string> &positives,
                       const std::vector<std::string> &negatives,
                       std::shared_ptr<Oracle> oracle, const SynthConfig &cfg) {
  if (positives.empty())
    throw std::invalid_argument("synthesis needs at least one positive example");
  for (auto &p : positives)
    if (std::find(negatives.begin(), negatives.end(), p) != negatives.end())
      throw std::invalid_argument("example is both positive and negative: " + p);

  SynthResult res;
  Budget budget(cfg.timeout_s, oracle.get());
  SynthConfig ccfg = cfg;
  ccfg.dedup_completions = cfg.decompose_examples;

  SketchStream stream(oracle, positives, cfg.locate_error);
  RegexPtr failed;
  while (res.sketches_tried < cfg.sketch_cap && !budget.exceeded()) {
    std::optional<RegexPtr> sketch;
    try {
      sketch = stream.next(failed);
    } catch (const ParseRetryExceeded &e) {
      res.reason = e.what();
      break;
    }
    if (!sketch) {
      res.reason = stream.end_reason().empty() ? "sketch stream exhausted"
                                               : stream.end_reason();
      break;
    }
    res.sketches_tried++;
    failed = *sketch;
    // Untyped-hole mode: the sketch's type annotations are discarded, so both
    // decomposition filtering and completion goals fall back to Any.
    if (!cfg.typed_holes)
      for (auto &h : collect_holes(*sketch))
        if (h->kind == Regex::Kind::Hole)
          sketch = substitute_hole(*sketch, h->hole_id,
                                   Regex::hole(Ty::any(), h->hole_id));

    bool has_meta = false;
    for (auto &h : collect_holes(*sketch))
      if (h->kind == Regex::Kind::MetaHole) has_meta = true;
    if (has_meta) continue;

    // A sketch whose widening rejects a positive can never cover it.
    RegexPtr wide = overapprox(*sketch);
    bool feasible = true;
    for (auto &p : positives)
      if (!matches(wide, p)) {
        feasible = false;
        break;
      }
    if (!feasible) continue;

    std::vector<Decomp> decs;
    if (cfg.decompose_examples) {
      DecompOptions dopt;
      dopt.cap = cfg.decomp_cap;
      dopt.typed_holes = cfg.typed_holes;
      decs = decompositions(*sketch, positives, oracle.get(), dopt);
    } else {
      decs.push_back(Decomp{});  // Every hole unconstrained.
    }

    for (auto &psi : decs) {
      if (budget.exceeded()) break;
      auto sol = synthesize_from_decomp(*sketch, psi, positives, negatives,
                                        oracle, ccfg, &budget);
      if (sol) {
        res.ok = true;
        res.regex = instantiate(*sketch, *sol);
        res.seconds = budget.elapsed();
        return res;
      }
    }
  }

  res.timed_out = budget.exceeded();
  if (res.timed_out)
    res.reason = "timeout";
  else if (res.reason.empty())
    res.reason = "no consistent regex within the sketch budget";
  res.seconds = budget.elapsed();
  return res;
}

}  // namespace semrex
