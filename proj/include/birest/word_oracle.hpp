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
// Brute-force bounded-derivation oracle for word equality in the
// universal inverse monoids, independent of the graph-closure path. A
// derivation step rewrites a factor by the Wagner congruence
// (p <-> p p^{-1} p, p p^{-1} q q^{-1} <-> q q^{-1} p p^{-1}) or by a
// defining relation of the variety. The oracle certifies equality only;
// it never asserts inequality.

#ifndef BIREST_WORD_ORACLE_HPP_
#define BIREST_WORD_ORACLE_HPP_

#include <cstddef>
#include <set>
#include <string>

#include "alphabet.hpp"
#include "ffbr.hpp"
#include "stephen.hpp"
#include "words.hpp"

namespace birest {

struct WordOracleOptions {
  int depth = 6;                     // max derivation length
  size_t max_states_per_side = 20000;  // cap; a capped search says Unknown
  size_t max_word_len = 24;
  size_t max_factor_len = 3;         // bound on p, q in Wagner moves
};

//! Equal if a derivation of length <= depth connects w1 and w2;
//! Unknown otherwise (including when a cap was hit). Bidirectional
//! search: balls of radius depth/2 around both words.
OracleVerdict word_oracle_equal(const SignedWord& w1, const SignedWord& w2,
                                Variety v, const Alphabet& a,
                                const WordOracleOptions& opts = {});

//! Canonical keys of all words derivable from w in <= depth steps
//! (capped). Two words whose balls intersect are equal in the variety.
std::set<std::string> derivation_ball(const SignedWord& w, Variety v,
                                      const Alphabet& a, int depth,
                                      size_t max_states, size_t max_word_len,
                                      size_t max_factor_len);

}  // namespace birest

#endif  // BIREST_WORD_ORACLE_HPP_
