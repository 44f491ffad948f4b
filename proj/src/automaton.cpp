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

#include "birest/automaton.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "birest/detail/fold.hpp"

namespace birest {

using Vertex = InverseAutomaton::Vertex;
using Edge = InverseAutomaton::Edge;

void InverseAutomaton::add_edge(Vertex src, const Label& lab, Vertex dst) {
  if (src >= num_vertices_ || dst >= num_vertices_) {
    throw std::out_of_range("edge endpoint is not a vertex");
  }
  edges_.insert(Edge{src, lab, dst});
}

bool InverseAutomaton::is_deterministic() const {
  std::set<std::pair<Vertex, Label>> out_seen, in_seen;
  for (const auto& e : edges_) {
    if (!out_seen.insert({e.src, e.lab}).second) {
      return false;
    }
    if (!in_seen.insert({e.dst, e.lab}).second) {
      return false;
    }
  }
  return true;
}

bool InverseAutomaton::is_connected() const {
  std::vector<std::vector<Vertex>> adj(num_vertices_);
  for (const auto& e : edges_) {
    adj[e.src].push_back(e.dst);
    adj[e.dst].push_back(e.src);
  }
  std::vector<bool> seen(num_vertices_, false);
  std::deque<Vertex> queue{start_};
  seen[start_] = true;
  size_t count = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        queue.push_back(w);
      }
    }
  }
  return count == num_vertices_;
}

std::optional<Vertex> InverseAutomaton::step(Vertex v, const Label& lab) const {
  auto it = edges_.lower_bound(Edge{v, lab, 0});
  if (it != edges_.end() && it->src == v && it->lab == lab) {
    return it->dst;
  }
  return std::nullopt;
}

std::optional<Vertex> InverseAutomaton::costep(Vertex v,
                                               const Label& lab) const {
  for (const auto& e : edges_) {
    if (e.dst == v && e.lab == lab) {
      return e.src;
    }
  }
  return std::nullopt;
}

InverseAutomaton linear_graph(const SignedWord& w) {
  InverseAutomaton a;
  Vertex prev = 0;
  for (const auto& sl : w) {
    Vertex next = a.add_vertex();
    if (!sl.inverse) {
      a.add_edge(prev, sl.base, next);
    } else {
      a.add_edge(next, sl.base, prev);
    }
    prev = next;
  }
  a.set_start(0);
  a.set_end(prev);
  return a;
}

namespace detail {

FoldWork::FoldWork(const InverseAutomaton& a)
    : uf(a.num_vertices()),
      edges(a.edges().begin(), a.edges().end()),
      start(a.start()),
      end(a.end()) {}

// One pass: canonicalize edge endpoints through the union-find and look
// for a (vertex, label) with two out-targets or two in-sources.
bool FoldWork::fold_step(Vertex* keep, Vertex* gone) {
  std::set<Edge> canon;
  for (const auto& e : edges) {
    canon.insert(Edge{uf.find(e.src), e.lab, uf.find(e.dst)});
  }
  edges.swap(canon);
  std::map<std::pair<Vertex, Label>, Vertex> out_seen, in_seen;
  for (const auto& e : edges) {
    if (auto [it, inserted] = out_seen.insert({{e.src, e.lab}, e.dst});
        !inserted) {
      *keep = std::min(it->second, e.dst);
      *gone = std::max(it->second, e.dst);
      return true;
    }
    if (auto [it, inserted] = in_seen.insert({{e.dst, e.lab}, e.src});
        !inserted) {
      *keep = std::min(it->second, e.src);
      *gone = std::max(it->second, e.src);
      return true;
    }
  }
  return false;
}

void FoldWork::merge(Vertex keep, Vertex gone) { uf.unite(keep, gone); }

InverseAutomaton FoldWork::to_automaton() const {
  // compact representatives to 0..n-1 in id order
  std::map<Vertex, Vertex> renumber;
  for (Vertex v = 0; v < uf.size(); ++v) {
    renumber.emplace(uf.find(v), 0);
  }
  Vertex next = 0;
  for (auto& [r, id] : renumber) {
    id = next++;
  }
  InverseAutomaton out;
  for (size_t i = 1; i < renumber.size(); ++i) {
    out.add_vertex();
  }
  for (const auto& e : edges) {
    out.add_edge(renumber.at(uf.find(e.src)), e.lab,
                 renumber.at(uf.find(e.dst)));
  }
  out.set_start(renumber.at(uf.find(start)));
  out.set_end(renumber.at(uf.find(end)));
  return out;
}

}  // namespace detail

InverseAutomaton fold(const InverseAutomaton& a) {
  detail::FoldWork work(a);
  Vertex keep, gone;
  while (work.fold_step(&keep, &gone)) {
    work.merge(keep, gone);
  }
  return work.to_automaton();
}

InverseAutomaton glue(const InverseAutomaton& a, const InverseAutomaton& b) {
  InverseAutomaton joined = a;
  // b's vertex v becomes v + |a| - 1, except start(b) which lands on
  // end(a); vertices after start(b) shift down by one.
  size_t base = a.num_vertices();
  auto embed = [&](Vertex v) -> Vertex {
    if (v == b.start()) {
      return a.end();
    }
    Vertex shifted = static_cast<Vertex>(base + v);
    return v > b.start() ? shifted - 1 : shifted;
  };
  for (size_t i = 0; i + 1 < b.num_vertices(); ++i) {
    joined.add_vertex();
  }
  for (const auto& e : b.edges()) {
    joined.add_edge(embed(e.src), e.lab, embed(e.dst));
  }
  joined.set_start(a.start());
  joined.set_end(embed(b.end()));
  return fold(joined);
}

namespace {

struct Adjacency {
  std::map<std::pair<Vertex, Label>, Vertex> out, in;

  explicit Adjacency(const InverseAutomaton& a) {
    for (const auto& e : a.edges()) {
      out.emplace(std::make_pair(e.src, e.lab), e.dst);
      in.emplace(std::make_pair(e.dst, e.lab), e.src);
    }
  }
};

}  // namespace

std::optional<std::vector<Vertex>> rooted_morphism(const InverseAutomaton& a,
                                                   const InverseAutomaton& b) {
  if (!a.is_deterministic() || !b.is_deterministic()) {
    throw std::logic_error("rooted_morphism requires folded automata");
  }
  constexpr Vertex kUnset = static_cast<Vertex>(-1);
  Adjacency adj_a(a);
  std::vector<Vertex> map(b.num_vertices(), kUnset);
  map[b.start()] = a.start();
  std::deque<Vertex> queue{b.start()};
  auto assign = [&](Vertex bv, Vertex av) -> bool {
    if (map[bv] == kUnset) {
      map[bv] = av;
      queue.push_back(bv);
      return true;
    }
    return map[bv] == av;
  };
  std::vector<std::vector<const Edge*>> touching(b.num_vertices());
  for (const auto& e : b.edges()) {
    touching[e.src].push_back(&e);
    touching[e.dst].push_back(&e);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (const Edge* e : touching[v]) {
      if (map[e->src] != kUnset) {
        auto it = adj_a.out.find({map[e->src], e->lab});
        if (it == adj_a.out.end() || !assign(e->dst, it->second)) {
          return std::nullopt;
        }
      }
      if (map[e->dst] != kUnset) {
        auto it = adj_a.in.find({map[e->dst], e->lab});
        if (it == adj_a.in.end() || !assign(e->src, it->second)) {
          return std::nullopt;
        }
      }
    }
  }
  if (map[b.end()] != a.end()) {
    return std::nullopt;
  }
  // b is connected, so the propagation reached every vertex
  for (Vertex v = 0; v < map.size(); ++v) {
    if (map[v] == kUnset) {
      return std::nullopt;
    }
  }
  return map;
}

bool accepts(const InverseAutomaton& a, const SignedWord& w) {
  if (!a.is_deterministic()) {
    throw std::logic_error("accepts requires a folded automaton");
  }
  Adjacency adj(a);
  Vertex cur = a.start();
  for (const auto& sl : w) {
    if (!sl.inverse) {
      auto it = adj.out.find({cur, sl.base});
      if (it == adj.out.end()) {
        return false;
      }
      cur = it->second;
    } else {
      auto it = adj.in.find({cur, sl.base});
      if (it == adj.in.end()) {
        return false;
      }
      cur = it->second;
    }
  }
  return cur == a.end();
}

namespace {

// Breadth-first renumbering from start; edges at each vertex explored in
// (label, direction) order with out before in. Deterministic and
// co-deterministic connected automata get a canonical numbering.
std::vector<Vertex> bfs_order(const InverseAutomaton& a) {
  constexpr Vertex kUnset = static_cast<Vertex>(-1);
  std::map<Vertex, std::vector<std::tuple<Label, int, Vertex>>> moves;
  for (const auto& e : a.edges()) {
    moves[e.src].emplace_back(e.lab, 0, e.dst);
    moves[e.dst].emplace_back(e.lab, 1, e.src);
  }
  for (auto& [v, list] : moves) {
    std::sort(list.begin(), list.end());
  }
  std::vector<Vertex> number(a.num_vertices(), kUnset);
  std::deque<Vertex> queue{a.start()};
  number[a.start()] = 0;
  Vertex next = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    auto it = moves.find(v);
    if (it == moves.end()) {
      continue;
    }
    for (const auto& [lab, dir, w] : it->second) {
      if (number[w] == kUnset) {
        number[w] = next++;
        queue.push_back(w);
      }
    }
  }
  return number;
}

}  // namespace

namespace {

std::string serialize_with(const InverseAutomaton& a,
                           const std::function<std::string(const Label&)>&
                               encode) {
  if (!a.is_deterministic() || !a.is_connected()) {
    throw std::logic_error(
        "canonical serialization requires a folded connected automaton");
  }
  auto number = bfs_order(a);
  std::vector<std::tuple<Vertex, std::string, Vertex>> lines;
  lines.reserve(a.edges().size());
  for (const auto& e : a.edges()) {
    lines.emplace_back(number[e.src], encode(e.lab), number[e.dst]);
  }
  std::sort(lines.begin(), lines.end());
  std::string out = std::to_string(a.num_vertices()) + " "
                    + std::to_string(number[a.start()]) + " "
                    + std::to_string(number[a.end()]) + "\n";
  for (const auto& [s, lab, d] : lines) {
    out += std::to_string(s) + " " + lab + " " + std::to_string(d) + "\n";
  }
  return out;
}

}  // namespace

std::string canonical_serialize(const InverseAutomaton& a,
                                const Alphabet& al) {
  return serialize_with(a, [&](const Label& l) { return label_code(l, al); });
}

namespace detail {

std::string canonical_bytes(const InverseAutomaton& a) {
  return serialize_with(a, [](const Label& l) {
    std::string out = l.barred ? "B" : "P";
    for (LetterId x : l.letters) {
      out += ":" + std::to_string(x);
    }
    return out;
  });
}

}  // namespace detail

bool iso_check(const InverseAutomaton& a, const InverseAutomaton& b) {
  if (a.num_vertices() != b.num_vertices()
      || a.edges().size() != b.edges().size()) {
    return false;
  }
  return detail::canonical_bytes(a) == detail::canonical_bytes(b);
}

std::string to_dot(const InverseAutomaton& a, const Alphabet& al) {
  std::string out = "digraph schutzenberger {\n  rankdir=LR;\n"
                    "  __start [shape=none, label=\"\"];\n"
                    "  __end [shape=none, label=\"\"];\n";
  for (Vertex v = 0; v < a.num_vertices(); ++v) {
    out += "  v" + std::to_string(v) + " [shape=circle, label=\""
           + std::to_string(v) + "\"];\n";
  }
  out += "  __start -> v" + std::to_string(a.start()) + ";\n";
  out += "  v" + std::to_string(a.end()) + " -> __end;\n";
  for (const auto& e : a.edges()) {
    out += "  v" + std::to_string(e.src) + " -> v" + std::to_string(e.dst)
           + " [label=\"" + label_name(e.lab, al) + "\""
           + (e.lab.barred ? ", style=dashed" : "") + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace birest
