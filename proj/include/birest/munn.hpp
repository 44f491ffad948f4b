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
// Munn trees: the classical model of the free inverse monoid, and on top
// of it the positive-corner model of the free birestriction monoid. Munn
// trees store vertex sets only; edges are implied by the Cayley tree of
// the free group, so a vertex set is a valid tree iff it contains 1 and
// is closed under geodesic prefixes.

#ifndef BIREST_MUNN_HPP_
#define BIREST_MUNN_HPP_

#include <set>
#include <string>
#include <vector>

#include "alphabet.hpp"
#include "term.hpp"
#include "words.hpp"

namespace birest {

//! Finite subtree of the Cayley tree of FG(X) containing 1, with an
//! endpoint vertex.
struct MunnTree {
  std::set<GroupWord> vertices;  // contains the empty word
  GroupWord endpoint;            // member of vertices

  bool operator==(const MunnTree&) const = default;
};

//! True iff every vertex's parent (drop the last letter) is present.
bool is_prefix_closed(const std::set<GroupWord>& vertices);

//! Vertices are the reduced prefixes of w; endpoint its reduced value.
//! Rejects barred letters.
MunnTree munn_of_word(const SignedWord& w);

MunnTree fi_mul(const MunnTree& s, const MunnTree& t);
MunnTree fi_inv(const MunnTree& s);
MunnTree fi_star(const MunnTree& s);
MunnTree fi_plus(const MunnTree& s);

std::string munn_serialize(const MunnTree& t, const Alphabet& a);
std::string munn_to_dot(const MunnTree& t, const Alphabet& a);

//! Element of the free birestriction monoid in coordinates: an idempotent
//! Munn tree and a positive word u which is one of its vertices (that the
//! whole geodesic of u is present then follows from prefix closure).
struct FBRElement {
  std::set<GroupWord> tree;
  std::vector<LetterId> u;

  bool operator==(const FBRElement&) const = default;
};

//! Structural evaluation; generators map to ({1,x}, x), M(t) to the
//! geodesic pair of sigma(t). Barred generators [u] evaluate like M(u).
FBRElement fbr_eval(const TermPtr& t);

bool fbr_equal(const TermPtr& t1, const TermPtr& t2);

//! The projection term D_w, built by the right-to-left recursion
//!   D_1 = 1, D_{wx} = (D_w x)^*, D_{wx^{-1}} = (x D_w)^+,
//! with barred letters treated as single generators of the extended
//! alphabet. The output contains no M() nodes.
TermPtr d_term(const SignedWord& w);

//! Evaluates a M()-free term over plain generators in the free inverse
//! monoid. Rejects M() nodes and barred generators.
MunnTree psi_fi(const TermPtr& t);

}  // namespace birest

#endif  // BIREST_MUNN_HPP_
