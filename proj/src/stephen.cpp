//
// birest - computing in free F-birestriction monoids
// Copyright (C) 2026 The birest developers
//
// This program is free software: you can redistribute it and/or modify
// it under the terms of the GNU General Public License as published by
// the Free Software Foundation, either version 3 of the License, or
// (at your option) any later version.
//
// This program is distributed in the hope that it will be useful,
// but WITHOUT ANY WARRANTY; without even the implied warranty of
// MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
// GNU General Public License for more details.
//
// You should have received a copy of the GNU General Public License
// along with this program.  If not, see <http://www.gnu.org/licenses/>.
//

#include "birest/stephen.hpp"

#include <algorithm>
#include <random>

#include "birest/detail/fold.hpp"
#include "birest/errors.hpp"

namespace birest {

using Vertex = InverseAutomaton::Vertex;
using Edge = InverseAutomaton::Edge;

std::string variety_name(Variety v) {
  switch (v) {
    case Variety::Free: return "free";
    case Variety::LS: return "ls";
    case Variety::RS: return "rs";
    case Variety::S: return "s";
    case Variety::P: return "p";
  }
  return "?";
}

std::optional<Variety> parse_variety(std::string_view name) {
  if (name == "free") return Variety::Free;
  if (name == "ls") return Variety::LS;
  if (name == "rs") return Variety::RS;
  if (name == "s") return Variety::S;
  if (name == "p") return Variety::P;
  return std::nullopt;
}

std::string ClosureTrace::to_text(const Alphabet& a) const {
  std::string out;
  for (const auto& ev : events) {
    switch (ev.kind) {
      case TraceEvent::Kind::Fold:
        out += "FOLD " + std::to_string(ev.a) + " " + std::to_string(ev.b)
               + " - -\n";
        break;
      case TraceEvent::Kind::R1:
        out += "R1 " + std::to_string(ev.a) + " " + std::to_string(ev.b)
               + " - " + label_code(ev.lab, a) + "\n";
        break;
      default: {
        const char* name = ev.kind == TraceEvent::Kind::R2   ? "R2"
                           : ev.kind == TraceEvent::Kind::R3 ? "R3"
                                                             : "R4";
        out += std::string(name) + " " + std::to_string(ev.a) + " "
               + std::to_string(ev.b) + " " + std::to_string(ev.c) + " "
               + label_code(ev.lab, a) + "\n";
        break;
      }
    }
  }
  return out;
}

namespace {

// Perfect-variety inputs live over X u \bar{X}: compound barred edges
// become chains of single barred letters through fresh vertices.
InverseAutomaton expand_compound_barred(const InverseAutomaton& a) {
  bool any = false;
  for (const auto& e : a.edges()) {
    if (e.lab.barred && e.lab.letters.size() > 1) {
      any = true;
      break;
    }
  }
  if (!any) {
    return a;
  }
  InverseAutomaton out;
  for (size_t i = 1; i < a.num_vertices(); ++i) {
    out.add_vertex();
  }
  for (const auto& e : a.edges()) {
    if (!e.lab.barred || e.lab.letters.size() == 1) {
      out.add_edge(e.src, e.lab, e.dst);
      continue;
    }
    Vertex cur = e.src;
    for (size_t i = 0; i < e.lab.letters.size(); ++i) {
      Vertex next = i + 1 == e.lab.letters.size() ? e.dst : out.add_vertex();
      out.add_edge(cur, Label::barred_word({e.lab.letters[i]}), next);
      cur = next;
    }
  }
  out.set_start(a.start());
  out.set_end(a.end());
  return out;
}

bool is_proper_prefix(const std::vector<LetterId>& p,
                      const std::vector<LetterId>& w) {
  return p.size() < w.size() && std::equal(p.begin(), p.end(), w.begin());
}

bool is_proper_suffix(const std::vector<LetterId>& s,
                      const std::vector<LetterId>& w) {
  return s.size() < w.size()
         && std::equal(s.rbegin(), s.rend(), w.rbegin());
}

struct RuleInstance {
  TraceEvent::Kind kind;
  Vertex a, b, c;
  Edge added;
};

// Applicable instances in rule-priority order; within a rule, the order
// follows the sorted edge set, so the scan is deterministic.
std::vector<RuleInstance> gather_instances(const std::set<Edge>& edges,
                                           Variety v) {
  std::vector<RuleInstance> out;
  for (const auto& e : edges) {
    if (!e.lab.barred) {
      Label bar = Label::barred_word({e.lab.letters[0]});
      if (!edges.count(Edge{e.src, bar, e.dst})) {
        out.push_back({TraceEvent::Kind::R1, e.src, e.dst, 0,
                       Edge{e.src, bar, e.dst}});
      }
    }
  }
  if (v == Variety::P) {
    return out;
  }
  std::vector<const Edge*> barred;
  for (const auto& e : edges) {
    if (e.lab.barred) {
      barred.push_back(&e);
    }
  }
  for (const Edge* e1 : barred) {
    for (const Edge* e2 : barred) {
      if (e1->dst != e2->src) {
        continue;
      }
      std::vector<LetterId> cat = e1->lab.letters;
      cat.insert(cat.end(), e2->lab.letters.begin(), e2->lab.letters.end());
      Edge add{e1->src, Label::barred_word(std::move(cat)), e2->dst};
      if (!edges.count(add)) {
        out.push_back({TraceEvent::Kind::R2, e1->src, e1->dst, e2->dst, add});
      }
    }
  }
  if (v == Variety::LS || v == Variety::S) {
    for (const Edge* e1 : barred) {
      for (const Edge* e2 : barred) {
        if (e1->src != e2->src
            || !is_proper_prefix(e1->lab.letters, e2->lab.letters)) {
          continue;
        }
        std::vector<LetterId> rest(e2->lab.letters.begin()
                                       + e1->lab.letters.size(),
                                   e2->lab.letters.end());
        Edge add{e1->dst, Label::barred_word(std::move(rest)), e2->dst};
        if (!edges.count(add)) {
          out.push_back(
              {TraceEvent::Kind::R3, e1->src, e1->dst, e2->dst, add});
        }
      }
    }
  }
  if (v == Variety::RS || v == Variety::S) {
    for (const Edge* e1 : barred) {
      for (const Edge* e2 : barred) {
        if (e1->dst != e2->dst
            || !is_proper_suffix(e1->lab.letters, e2->lab.letters)) {
          continue;
        }
        std::vector<LetterId> front(e2->lab.letters.begin(),
                                    e2->lab.letters.end()
                                        - e1->lab.letters.size());
        Edge add{e2->src, Label::barred_word(std::move(front)), e1->src};
        if (!edges.count(add)) {
          out.push_back(
              {TraceEvent::Kind::R4, e2->src, e1->src, e1->dst, add});
        }
      }
    }
  }
  return out;
}

struct CloseWork {
  detail::FoldWork fw;
  ClosureTrace trace;
  uint64_t events_left;
  uint64_t max_events;

  CloseWork(const InverseAutomaton& a, const ClosureBudget& budget)
      : fw(a), events_left(budget.max_events), max_events(budget.max_events) {}

  void count_event() {
    if (events_left == 0) {
      throw BudgetExhaustedError(max_events);
    }
    --events_left;
  }

  void fold_all() {
    Vertex keep, gone;
    while (fw.fold_step(&keep, &gone)) {
      count_event();
      fw.merge(keep, gone);
      trace.events.push_back(
          TraceEvent{TraceEvent::Kind::Fold, keep, gone, 0, Label{}});
    }
  }
};

}  // namespace

Closure close(const InverseAutomaton& input, Variety v,
              const ClosureBudget& budget, const WorklistPolicy& policy) {
  InverseAutomaton prepared =
      v == Variety::P ? expand_compound_barred(input) : input;
  CloseWork work(prepared, budget);
  std::optional<std::mt19937_64> rng;
  if (policy.shuffle_seed) {
    rng.emplace(*policy.shuffle_seed);
  }
  work.fold_all();
  for (;;) {
    auto instances = gather_instances(work.fw.edges, v);
    if (instances.empty()) {
      break;
    }
    size_t idx = rng ? static_cast<size_t>((*rng)() % instances.size()) : 0;
    const RuleInstance& inst = instances[idx];
    work.count_event();
    work.fw.edges.insert(inst.added);
    work.trace.events.push_back(
        TraceEvent{inst.kind, inst.a, inst.b, inst.c, inst.added.lab});
    work.fold_all();
  }
  return Closure{work.fw.to_automaton(), std::move(work.trace)};
}

Closure closure_of_word(const SignedWord& w, Variety v,
                        const ClosureBudget& budget,
                        const WorklistPolicy& policy) {
  SignedWord prepared = v == Variety::P ? expand_barred(w) : w;
  return close(linear_graph(prepared), v, budget, policy);
}

bool decide_equal_inv(const SignedWord& w1, const SignedWord& w2, Variety v,
                      const ClosureBudget& budget) {
  SignedWord u1 = v == Variety::P ? expand_barred(w1) : w1;
  SignedWord u2 = v == Variety::P ? expand_barred(w2) : w2;
  auto c1 = close(linear_graph(u1), v, budget);
  if (!accepts(c1.graph, u2)) {
    return false;
  }
  auto c2 = close(linear_graph(u2), v, budget);
  return accepts(c2.graph, u1);
}

bool is_idempotent(const SignedWord& w, Variety v,
                   const ClosureBudget& budget) {
  SignedWord ww = w;
  ww.insert(ww.end(), w.begin(), w.end());
  return decide_equal_inv(w, ww, v, budget);
}

InverseAutomaton mul_inv(const InverseAutomaton& a, const InverseAutomaton& b,
                         Variety v, const ClosureBudget& budget) {
  return close(glue(a, b), v, budget).graph;
}

InverseAutomaton star_inv(const InverseAutomaton& a) {
  InverseAutomaton out = a;
  out.set_start(a.end());
  return out;
}

InverseAutomaton plus_inv(const InverseAutomaton& a) {
  InverseAutomaton out = a;
  out.set_end(a.start());
  return out;
}

SignedWord max_generator_word(const std::vector<LetterId>& u, Variety v) {
  SignedWord out;
  if (u.empty()) {
    return out;
  }
  if (v == Variety::P) {
    for (LetterId x : u) {
      out.push_back(SignedLetter{Label::barred_word({x}), false});
    }
  } else {
    out.push_back(SignedLetter{Label::barred_word(u), false});
  }
  return out;
}

}  // namespace birest
