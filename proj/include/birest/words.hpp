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
// Signed words over the extended generating set X u \bar{X^+} and reduced
// words over X u X^{-1} (free group elements). Values are immutable after
// construction and freely shareable between threads.

#ifndef BIREST_WORDS_HPP_
#define BIREST_WORDS_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "alphabet.hpp"

namespace birest {

//! A positive edge/generator label: a plain letter x or a barred word
//! \bar{u} with u a nonempty positive word. Equality is structural; the
//! infinite barred alphabet exists only through the labels actually built.
struct Label {
  bool barred = false;
  std::vector<LetterId> letters;  // size 1 when plain, >= 1 when barred

  static Label plain(LetterId x) { return Label{false, {x}}; }
  static Label barred_word(std::vector<LetterId> w);

  auto operator<=>(const Label&) const = default;
};

//! A letter of the free involutive monoid over the extended alphabet.
struct SignedLetter {
  Label base;
  bool inverse = false;

  auto operator<=>(const SignedLetter&) const = default;
};

//! Element of the free involutive monoid; empty denotes 1.
using SignedWord = std::vector<SignedLetter>;

//! Letter of a free group word.
struct GLetter {
  LetterId letter = 0;
  bool inverse = false;

  auto operator<=>(const GLetter&) const = default;
};

//! Reduced word over X u X^{-1}; represents an element of FG(X).
//! All constructors below keep words reduced.
using GroupWord = std::vector<GLetter>;

//! (x_1...x_n)^{-1} = x_n^{-1}...x_1^{-1}; an involution and an
//! anti-morphism of concatenation.
SignedWord involutive_inverse(const SignedWord& w);

//! Spells each barred letter out as its underlying plain word (reversing
//! and inverting under a negative sign), then freely reduces. The result
//! is the value of w in FG(X) under x |-> x, \bar{u} |-> u.
GroupWord group_value(const SignedWord& w);

//! Replaces every barred letter [x1...xn]^e by the product of single
//! barred letters [x1]...[xn] (reversed and inverted when e = -1). Words
//! over X u \bar{X} are the generating set of the perfect variety.
SignedWord expand_barred(const SignedWord& w);

GroupWord gw_reduce(const GroupWord& w);
GroupWord gw_concat(const GroupWord& a, const GroupWord& b);
GroupWord gw_inverse(const GroupWord& a);
GroupWord gw_of_positive(const std::vector<LetterId>& u);
bool gw_is_reduced(const GroupWord& w);

std::string label_name(const Label& l, const Alphabet& a);  // "x" or "[xy]"
std::string label_code(const Label& l, const Alphabet& a);  // "P:x" or "B:xy"
std::string print_signed_word(const SignedWord& w, const Alphabet& a);
std::string gw_name(const GroupWord& w, const Alphabet& a);

//! Grammar: sequence of atoms GEN | "[" GEN+ "]", each optionally
//! suffixed by "'" for the formal inverse; "1" or nothing is the empty
//! word. Throws ParseError.
SignedWord parse_signed_word(std::string_view text, const Alphabet& a);

//! Splits a run of identifier characters into declared letters, longest
//! match first with backtracking (multi-character letters work inside
//! barred atoms). Throws ParseError at err_pos when no split exists.
std::vector<LetterId> split_letter_run(std::string_view run, const Alphabet& a,
                                       size_t err_pos);

}  // namespace birest

#endif  // BIREST_WORDS_HPP_
