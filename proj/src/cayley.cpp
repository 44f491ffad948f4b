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

#include "birest/cayley.hpp"

#include <deque>
#include <stdexcept>

#include "birest/errors.hpp"

namespace birest {

namespace {

GroupWord edge_target(const TwinEdgeKey& k) {
  return gw_concat(k.src, GroupWord{GLetter{k.letter, false}});
}

TwinGraph translate_graph(const GroupWord& g, const TwinGraph& gr) {
  TwinGraph out;
  for (const auto& v : gr.vertices) {
    out.vertices.insert(gw_concat(g, v));
  }
  for (const auto& [k, mask] : gr.edges) {
    out.edges[TwinEdgeKey{gw_concat(g, k.src), k.letter}] |= mask;
  }
  return out;
}

TwinGraph union_graph(TwinGraph a, const TwinGraph& b) {
  a.vertices.insert(b.vertices.begin(), b.vertices.end());
  for (const auto& [k, mask] : b.edges) {
    a.edges[k] |= mask;
  }
  return a;
}

TwinGraph barred_path(const std::vector<LetterId>& u) {
  TwinGraph out;
  GroupWord cur;
  out.vertices.insert(cur);
  for (LetterId x : u) {
    out.edges[TwinEdgeKey{cur, x}] |= kBarredBit;
    cur = gw_concat(cur, GroupWord{GLetter{x, false}});
    out.vertices.insert(cur);
  }
  return out;
}

CayleyPerfectElement checked(TwinGraph g, std::vector<LetterId> u) {
  CayleyPerfectElement out{std::move(g), std::move(u)};
  check_twin_invariants(out);
  return out;
}

}  // namespace

void check_twin_invariants(const CayleyPerfectElement& el) {
  const TwinGraph& g = el.gamma;
  if (!g.vertices.count(GroupWord{})) {
    throw std::logic_error("twin graph must contain the origin");
  }
  std::map<GroupWord, std::vector<GroupWord>> adj;
  for (const auto& [k, mask] : g.edges) {
    if (mask == 0 || (mask & kPlainBit && !(mask & kBarredBit))) {
      throw std::logic_error("twin closure violated");
    }
    GroupWord dst = edge_target(k);
    if (!g.vertices.count(k.src) || !g.vertices.count(dst)) {
      throw std::logic_error("edge endpoint is not a vertex");
    }
    adj[k.src].push_back(dst);
    adj[dst].push_back(k.src);
  }
  std::set<GroupWord> seen{GroupWord{}};
  std::deque<GroupWord> queue{GroupWord{}};
  while (!queue.empty()) {
    GroupWord v = queue.front();
    queue.pop_front();
    for (const auto& w : adj[v]) {
      if (seen.insert(w).second) {
        queue.push_back(w);
      }
    }
  }
  if (seen.size() != g.vertices.size()) {
    throw std::logic_error("twin graph is not connected");
  }
  // e <= \bar{u}^+: the barred path of u from the origin
  GroupWord cur;
  for (LetterId x : el.u) {
    auto it = g.edges.find(TwinEdgeKey{cur, x});
    if (it == g.edges.end() || !(it->second & kBarredBit)) {
      throw std::logic_error("barred path of u is missing");
    }
    cur = gw_concat(cur, GroupWord{GLetter{x, false}});
  }
  if (!g.vertices.count(cur)) {
    throw std::logic_error("u is not a vertex");
  }
}

CayleyPerfectElement eval_p(const TermPtr& t, const Alphabet& a) {
  using Kind = BiTerm::Kind;
  switch (t->kind) {
    case Kind::One: {
      TwinGraph g;
      g.vertices.insert(GroupWord{});
      return checked(std::move(g), {});
    }
    case Kind::Gen: {
      if (t->gen.barred) {
        return checked(barred_path(t->gen.letters), t->gen.letters);
      }
      LetterId x = t->gen.letters[0];
      TwinGraph g;
      g.vertices.insert(GroupWord{});
      g.vertices.insert(GroupWord{GLetter{x, false}});
      g.edges[TwinEdgeKey{GroupWord{}, x}] = kPlainBit | kBarredBit;
      return checked(std::move(g), {x});
    }
    case Kind::Mul: {
      CayleyPerfectElement l = eval_p(t->child, a);
      CayleyPerfectElement r = eval_p(t->right, a);
      TwinGraph g = union_graph(
          l.gamma, translate_graph(gw_of_positive(l.u), r.gamma));
      std::vector<LetterId> u = l.u;
      u.insert(u.end(), r.u.begin(), r.u.end());
      return checked(std::move(g), std::move(u));
    }
    case Kind::Star: {
      CayleyPerfectElement l = eval_p(t->child, a);
      return checked(
          translate_graph(gw_inverse(gw_of_positive(l.u)), l.gamma), {});
    }
    case Kind::Plus: {
      CayleyPerfectElement l = eval_p(t->child, a);
      return checked(std::move(l.gamma), {});
    }
    case Kind::Max: {
      auto u = sigma_image(t->child);
      TwinGraph g = barred_path(u);
      return checked(std::move(g), std::move(u));
    }
  }
  throw std::logic_error("unreachable");
}

bool decide_equal_p(const TermPtr& t1, const TermPtr& t2, const Alphabet& a) {
  return eval_p(t1, a) == eval_p(t2, a);
}

bool leq_p(const CayleyPerfectElement& a, const CayleyPerfectElement& b) {
  if (a.u != b.u) {
    return false;
  }
  for (const auto& v : b.gamma.vertices) {
    if (!a.gamma.vertices.count(v)) {
      return false;
    }
  }
  for (const auto& [k, mask] : b.gamma.edges) {
    auto it = a.gamma.edges.find(k);
    if (it == a.gamma.edges.end() || (it->second & mask) != mask) {
      return false;
    }
  }
  return true;
}

bool crosscheck(const TermPtr& t1, const TermPtr& t2,
                const VarietyContext& ctx) {
  if (ctx.variety != Variety::P) {
    throw std::invalid_argument("crosscheck runs in the perfect variety");
  }
  bool geometric = decide_equal_p(t1, t2, ctx.alphabet);
  bool coordinate = decide_equal(t1, t2, ctx);
  if (geometric != coordinate) {
    throw DiscrepancyError(print_term(t1, ctx.alphabet),
                           print_term(t2, ctx.alphabet));
  }
  return geometric;
}

std::string twin_serialize(const TwinGraph& g, const Alphabet& a) {
  std::string out;
  for (const auto& v : g.vertices) {
    out += "v " + gw_name(v, a) + "\n";
  }
  for (const auto& [k, mask] : g.edges) {
    GroupWord dst = edge_target(k);
    if (mask & kPlainBit) {
      out += gw_name(k.src, a) + " " + a.name(k.letter) + " "
             + gw_name(dst, a) + "\n";
    }
    if (mask & kBarredBit) {
      out += gw_name(k.src, a) + " [" + a.name(k.letter) + "] "
             + gw_name(dst, a) + "\n";
    }
  }
  return out;
}

std::string twin_to_dot(const TwinGraph& g, const Alphabet& a) {
  std::string out = "digraph twin {\n  rankdir=LR;\n";
  auto node = [&](const GroupWord& w) {
    return "\"" + gw_name(w, a) + "\"";
  };
  for (const auto& v : g.vertices) {
    out += "  " + node(v) + " [shape=circle];\n";
  }
  for (const auto& [k, mask] : g.edges) {
    GroupWord dst = edge_target(k);
    if (mask & kPlainBit) {
      out += "  " + node(k.src) + " -> " + node(dst) + " [label=\""
             + a.name(k.letter) + "\"];\n";
    }
    if (mask & kBarredBit) {
      out += "  " + node(k.src) + " -> " + node(dst) + " [label=\"["
             + a.name(k.letter) + "]\", style=dashed];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace birest
