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

#ifndef BIREST_TERM_HPP_
#define BIREST_TERM_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "alphabet.hpp"
#include "words.hpp"

namespace birest {

struct BiTerm;
using TermPtr = std::shared_ptr<const BiTerm>;

//! AST over the signature (., ^*, ^+, M(), 1). Terms are unreduced; all
//! simplification happens in the evaluation modules. A Gen node carries an
//! extended generator symbol: a plain letter x or a barred word [u], the
//! latter denoting the maximum element M(u) of the sigma-class of u.
struct BiTerm {
  enum class Kind { One, Gen, Mul, Star, Plus, Max };

  Kind kind = Kind::One;
  Label gen;            // Kind::Gen only
  TermPtr child;        // Mul: left operand; Star/Plus/Max: operand
  TermPtr right;        // Mul: right operand
};

TermPtr t_one();
TermPtr t_gen(LetterId x);
TermPtr t_gen(const Label& g);
TermPtr t_mul(TermPtr a, TermPtr b);
TermPtr t_star(TermPtr a);
TermPtr t_plus(TermPtr a);
TermPtr t_max(TermPtr a);

//! Left-associated product of generators; One when u is empty.
TermPtr t_word(const std::vector<LetterId>& u);

bool term_eq(const TermPtr& a, const TermPtr& b);
size_t term_size(const TermPtr& t);

//! Prints in the input grammar; parse(print(t)) == t structurally.
std::string print_term(const TermPtr& t, const Alphabet& a);

//! Grammar (whitespace juxtaposition = multiplication, left-associative):
//!   term   := factor { factor }
//!   factor := atom { "^*" | "^+" }
//!   atom   := "1" | GEN | "[" GEN { GEN } "]" | "M(" term ")" | "(" term ")"
//! Throws ParseError with position; unknown generators are rejected.
TermPtr parse_term(std::string_view text, const Alphabet& a);

//! Image under the canonical morphism onto X^*: generators map to
//! themselves, projections (stars and pluses) to the empty word, and
//! M(t) to the image of t.
std::vector<LetterId> sigma_image(const TermPtr& t);

}  // namespace birest

#endif  // BIREST_TERM_HPP_
