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
// Birooted edge-labeled graphs over positive labels. Traversal by a
// negative letter is the reverse of the positive transition: negative
// edges are views, never stored, so involution closure cannot be
// violated. Operations return new values; existing automata are never
// mutated through the public surface.

#ifndef BIREST_AUTOMATON_HPP_
#define BIREST_AUTOMATON_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "alphabet.hpp"
#include "words.hpp"

namespace birest {

class InverseAutomaton {
 public:
  using Vertex = uint32_t;

  struct Edge {
    Vertex src;
    Label lab;
    Vertex dst;

    auto operator<=>(const Edge&) const = default;
  };

  //! Single vertex, start = end, no edges (the identity element).
  InverseAutomaton() : num_vertices_(1) {}

  Vertex add_vertex() {
    return static_cast<Vertex>(num_vertices_++);
  }

  //! Inserts (src, lab, dst); duplicates are ignored.
  void add_edge(Vertex src, const Label& lab, Vertex dst);

  void set_start(Vertex v) { start_ = v; }
  void set_end(Vertex v) { end_ = v; }

  Vertex start() const noexcept { return start_; }
  Vertex end() const noexcept { return end_; }
  size_t num_vertices() const noexcept { return num_vertices_; }
  const std::set<Edge>& edges() const noexcept { return edges_; }

  //! Deterministic and co-deterministic: at most one out-edge and one
  //! in-edge per (vertex, label).
  bool is_deterministic() const;

  //! Connected when viewed as an undirected graph.
  bool is_connected() const;

  //! Unique out-neighbour along lab, if any (assumes deterministic).
  std::optional<Vertex> step(Vertex v, const Label& lab) const;
  //! Unique in-neighbour along lab, if any (assumes co-deterministic).
  std::optional<Vertex> costep(Vertex v, const Label& lab) const;

  bool operator==(const InverseAutomaton&) const = default;

 private:
  size_t num_vertices_;
  std::set<Edge> edges_;
  Vertex start_ = 0;
  Vertex end_ = 0;
};

//! Path with |w|+1 vertices spelling w; negative letters traverse
//! reversed positive edges. Not yet deterministic.
InverseAutomaton linear_graph(const SignedWord& w);

//! Stallings folding: merges equal-label out-edge targets (and dually
//! in-edge sources) until deterministic and co-deterministic. Roots are
//! tracked through merges. The result is independent of merge order up
//! to isomorphism; this is tested, not assumed.
InverseAutomaton fold(const InverseAutomaton& a);

//! Disjoint union with end(a) = start(b) identified, folded;
//! start = start(a), end = end(b).
InverseAutomaton glue(const InverseAutomaton& a, const InverseAutomaton& b);

//! The unique label-preserving map b -> a with start(b) |-> start(a) and
//! end(b) |-> end(a), if it exists. Both inputs must be deterministic;
//! determinism makes the candidate map unique, so this is a breadth-first
//! propagation, not a search. Existence witnesses elem(a) <= elem(b).
std::optional<std::vector<InverseAutomaton::Vertex>> rooted_morphism(
    const InverseAutomaton& a, const InverseAutomaton& b);

//! True iff reading w from start(a) is everywhere defined and terminates
//! at end(a). a must be deterministic.
bool accepts(const InverseAutomaton& a, const SignedWord& w);

//! Birooted isomorphism of deterministic connected automata.
bool iso_check(const InverseAutomaton& a, const InverseAutomaton& b);

//! Vertices renumbered breadth-first from start with label-sorted edge
//! exploration; equal bytes iff birooted-isomorphic. Format: header line
//! "n start end", then "src P:x dst" / "src B:xy dst" lines sorted
//! lexicographically.
std::string canonical_serialize(const InverseAutomaton& a, const Alphabet& al);

//! DOT export; plain edges solid, barred edges dashed.
std::string to_dot(const InverseAutomaton& a, const Alphabet& al);

}  // namespace birest

#endif  // BIREST_AUTOMATON_HPP_
