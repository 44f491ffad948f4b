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
// Seeded generators for the property suites. Everything is a pure
// function of the Rng state, so a (seed, case index) pair reproduces a
// case regardless of thread count.

#ifndef BIREST_GENERATORS_HPP_
#define BIREST_GENERATORS_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "alphabet.hpp"
#include "stephen.hpp"
#include "term.hpp"
#include "words.hpp"

namespace birest {

class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed ^ 0x9e3779b97f4a7c15ULL) {}

  uint64_t next() { return eng_(); }
  size_t below(size_t n) { return n == 0 ? 0 : static_cast<size_t>(next() % n); }
  bool flip() { return (next() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

std::vector<LetterId> random_positive_word(Rng& rng, const Alphabet& a,
                                           size_t max_len,
                                           bool nonempty = false);

SignedWord random_plain_signed_word(Rng& rng, const Alphabet& a,
                                    size_t max_len);

//! Letters drawn from X and from barred words of length <= max_barred_len.
SignedWord random_extended_signed_word(Rng& rng, const Alphabet& a,
                                       size_t max_len, size_t max_barred_len);

struct TermGenOptions {
  size_t max_size = 8;
  bool allow_max = true;
  bool allow_barred_gen = false;
  size_t max_barred_len = 2;
};

TermPtr random_term(Rng& rng, const Alphabet& a, const TermGenOptions& opts);

//! A word with trivial value in FG(X), built in the nested shape
//! l_1 v_1 m_1^{-1} ... l_n v_n m_n^{-1} where each (l_i, m_i) is a pair
//! of letters with the same group value and each v_i is itself trivial.
//! letter_pool holds the letters to draw from (plain or barred).
SignedWord random_trivial_value_word(Rng& rng,
                                     const std::vector<Label>& letter_pool,
                                     size_t depth, size_t max_blocks);

//! t rewritten by `steps` random identity applications of the variety;
//! the result is equal to t in the variety by construction.
TermPtr mutate_equal(Rng& rng, const TermPtr& t, Variety v, int steps);

}  // namespace birest

#endif  // BIREST_GENERATORS_HPP_
