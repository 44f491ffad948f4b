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

#include "birest/munn.hpp"

#include <stdexcept>

namespace birest {

bool is_prefix_closed(const std::set<GroupWord>& vertices) {
  if (!vertices.count(GroupWord{})) {
    return false;
  }
  for (const auto& w : vertices) {
    if (w.empty()) {
      continue;
    }
    GroupWord parent(w.begin(), w.end() - 1);
    if (!vertices.count(parent)) {
      return false;
    }
  }
  return true;
}

namespace {

std::set<GroupWord> translate(const GroupWord& g,
                              const std::set<GroupWord>& vs) {
  std::set<GroupWord> out;
  for (const auto& v : vs) {
    out.insert(gw_concat(g, v));
  }
  return out;
}

// Unions of prefix-closed sets sharing a connecting vertex stay
// prefix-closed; asserted, never recomputed.
void check_tree(const std::set<GroupWord>& vs) {
  if (!is_prefix_closed(vs)) {
    throw std::logic_error("Munn tree is not prefix-closed");
  }
}

}  // namespace

MunnTree munn_of_word(const SignedWord& w) {
  MunnTree t;
  GroupWord cur;
  t.vertices.insert(cur);
  for (const auto& sl : w) {
    if (sl.base.barred) {
      throw std::invalid_argument("munn_of_word requires plain letters");
    }
    GLetter g{sl.base.letters[0], sl.inverse};
    cur = gw_concat(cur, GroupWord{g});
    t.vertices.insert(cur);
  }
  t.endpoint = cur;
  check_tree(t.vertices);
  return t;
}

MunnTree fi_mul(const MunnTree& s, const MunnTree& t) {
  MunnTree out;
  out.vertices = s.vertices;
  auto shifted = translate(s.endpoint, t.vertices);
  out.vertices.insert(shifted.begin(), shifted.end());
  out.endpoint = gw_concat(s.endpoint, t.endpoint);
  check_tree(out.vertices);
  return out;
}

MunnTree fi_inv(const MunnTree& s) {
  MunnTree out;
  out.vertices = translate(gw_inverse(s.endpoint), s.vertices);
  out.endpoint = gw_inverse(s.endpoint);
  check_tree(out.vertices);
  return out;
}

MunnTree fi_star(const MunnTree& s) {
  MunnTree out;
  out.vertices = translate(gw_inverse(s.endpoint), s.vertices);
  out.endpoint = GroupWord{};
  check_tree(out.vertices);
  return out;
}

MunnTree fi_plus(const MunnTree& s) {
  MunnTree out;
  out.vertices = s.vertices;
  out.endpoint = GroupWord{};
  return out;
}

std::string munn_serialize(const MunnTree& t, const Alphabet& a) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : t.vertices) {
    if (!first) {
      out += ",";
    }
    first = false;
    out += gw_name(v, a);
  }
  out += "} @ " + gw_name(t.endpoint, a);
  return out;
}

std::string munn_to_dot(const MunnTree& t, const Alphabet& a) {
  std::string out = "digraph munn {\n  rankdir=LR;\n";
  auto node = [&](const GroupWord& w) {
    return "\"" + gw_name(w, a) + "\"";
  };
  for (const auto& v : t.vertices) {
    std::string shape = v == t.endpoint ? "doublecircle" : "circle";
    out += "  " + node(v) + " [shape=" + shape + "];\n";
  }
  for (const auto& v : t.vertices) {
    if (v.empty()) {
      continue;
    }
    GroupWord parent(v.begin(), v.end() - 1);
    GLetter last = v.back();
    if (!last.inverse) {
      out += "  " + node(parent) + " -> " + node(v) + " [label=\""
             + a.name(last.letter) + "\"];\n";
    } else {
      out += "  " + node(v) + " -> " + node(parent) + " [label=\""
             + a.name(last.letter) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

namespace {

std::set<GroupWord> geodesic(const std::vector<LetterId>& u) {
  std::set<GroupWord> out;
  GroupWord cur;
  out.insert(cur);
  for (LetterId x : u) {
    cur.push_back(GLetter{x, false});
    out.insert(cur);
  }
  return out;
}

}  // namespace

FBRElement fbr_eval(const TermPtr& t) {
  using Kind = BiTerm::Kind;
  FBRElement out;
  switch (t->kind) {
    case Kind::One:
      out.tree.insert(GroupWord{});
      break;
    case Kind::Gen:
      // a barred generator [u] denotes M(u) and evaluates to (u^+, u)
      out.tree = geodesic(t->gen.letters);
      out.u = t->gen.letters;
      break;
    case Kind::Mul: {
      FBRElement a = fbr_eval(t->child);
      FBRElement b = fbr_eval(t->right);
      out.tree = a.tree;
      auto shifted = translate(gw_of_positive(a.u), b.tree);
      out.tree.insert(shifted.begin(), shifted.end());
      out.u = a.u;
      out.u.insert(out.u.end(), b.u.begin(), b.u.end());
      break;
    }
    case Kind::Star: {
      FBRElement a = fbr_eval(t->child);
      out.tree = translate(gw_inverse(gw_of_positive(a.u)), a.tree);
      break;
    }
    case Kind::Plus: {
      FBRElement a = fbr_eval(t->child);
      out.tree = a.tree;
      break;
    }
    case Kind::Max: {
      auto u = sigma_image(t->child);
      out.tree = geodesic(u);
      out.u = std::move(u);
      break;
    }
  }
  check_tree(out.tree);
  if (!out.tree.count(gw_of_positive(out.u))) {
    throw std::logic_error("u must be a vertex of the tree");
  }
  return out;
}

bool fbr_equal(const TermPtr& t1, const TermPtr& t2) {
  return fbr_eval(t1) == fbr_eval(t2);
}

namespace {

TermPtr mul_eliding_one(TermPtr a, TermPtr b) {
  if (a->kind == BiTerm::Kind::One) {
    return b;
  }
  if (b->kind == BiTerm::Kind::One) {
    return a;
  }
  return t_mul(std::move(a), std::move(b));
}

}  // namespace

TermPtr d_term(const SignedWord& w) {
  TermPtr d = t_one();
  for (const auto& sl : w) {
    TermPtr atom = t_gen(sl.base);
    if (!sl.inverse) {
      d = t_star(mul_eliding_one(d, atom));
    } else {
      d = t_plus(mul_eliding_one(atom, d));
    }
  }
  return d;
}

MunnTree psi_fi(const TermPtr& t) {
  using Kind = BiTerm::Kind;
  switch (t->kind) {
    case Kind::One: {
      MunnTree out;
      out.vertices.insert(GroupWord{});
      return out;
    }
    case Kind::Gen: {
      if (t->gen.barred) {
        throw std::invalid_argument(
            "psi_fi is defined over plain generators only");
      }
      MunnTree out;
      out.vertices.insert(GroupWord{});
      out.endpoint = GroupWord{GLetter{t->gen.letters[0], false}};
      out.vertices.insert(out.endpoint);
      return out;
    }
    case Kind::Mul:
      return fi_mul(psi_fi(t->child), psi_fi(t->right));
    case Kind::Star:
      return fi_star(psi_fi(t->child));
    case Kind::Plus:
      return fi_plus(psi_fi(t->child));
    case Kind::Max:
      throw std::invalid_argument("psi_fi rejects M() nodes");
  }
  throw std::logic_error("unreachable");
}

}  // namespace birest
