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
// Independent geometric model of the free perfect F-birestriction monoid:
// twin-closed finite connected subgraphs of the Cayley graph of the free
// group over X u \bar{X}, paired with a positive word. Vertices are
// reduced words, so equality is set equality and no isomorphism search is
// needed. The Cayley graph itself is never materialized.

#ifndef BIREST_CAYLEY_HPP_
#define BIREST_CAYLEY_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "alphabet.hpp"
#include "ffbr.hpp"
#include "term.hpp"
#include "words.hpp"

namespace birest {

//! Cayley-tree edge from src to (src x)_r, x a positive letter. Left
//! translation maps keys to keys; orientation never flips.
struct TwinEdgeKey {
  GroupWord src;
  LetterId letter = 0;

  auto operator<=>(const TwinEdgeKey&) const = default;
};

inline constexpr uint8_t kPlainBit = 1;
inline constexpr uint8_t kBarredBit = 2;

//! Twin closure invariant: a plain label on an edge forces the barred
//! label (the converse may fail: barred-only edges are legal).
struct TwinGraph {
  std::set<GroupWord> vertices;             // contains the empty word
  std::map<TwinEdgeKey, uint8_t> edges;     // nonempty label masks

  bool operator==(const TwinGraph&) const = default;
};

struct CayleyPerfectElement {
  TwinGraph gamma;
  std::vector<LetterId> u;

  bool operator==(const CayleyPerfectElement&) const = default;
};

//! Throws std::logic_error if an invariant is violated: twin closure,
//! connectivity, origin membership, the barred path of u, u a vertex.
void check_twin_invariants(const CayleyPerfectElement& el);

//! Structural evaluation: x |-> ({1,x} with both labels, x),
//! M(t) |-> (barred path of sigma(t), sigma(t)),
//! (G1,u)(G2,v) = (G1 u uG2, uv), (G,u)^* = (u^{-1}G, 1), (G,u)^+ = (G,1).
//! Unions of twin-closed graphs are twin-closed, so no re-closure runs.
CayleyPerfectElement eval_p(const TermPtr& t, const Alphabet& a);

//! u-components equal and twin graphs equal as labeled sets.
bool decide_equal_p(const TermPtr& t1, const TermPtr& t2, const Alphabet& a);

//! Natural order: same u and gamma(a) contains gamma(b) labelwise.
bool leq_p(const CayleyPerfectElement& a, const CayleyPerfectElement& b);

//! Dual-model consistency: asserts decide_equal_p agrees with the
//! closure-engine decision in the perfect variety and returns the shared
//! verdict. Throws DiscrepancyError naming the pair otherwise.
bool crosscheck(const TermPtr& t1, const TermPtr& t2,
                const VarietyContext& ctx);

//! Sorted (source-word, label, target-word) triples.
std::string twin_serialize(const TwinGraph& g, const Alphabet& a);
//! DOT with the solid/dashed convention.
std::string twin_to_dot(const TwinGraph& g, const Alphabet& a);

}  // namespace birest

#endif  // BIREST_CAYLEY_HPP_
