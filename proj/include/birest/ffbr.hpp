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
// Coordinatized arithmetic for the free F-birestriction monoid and its
// left-strong/right-strong/strong/perfect variants: elements are pairs
// (e, u) of a closed rooted idempotent graph and a positive word, with
//
//   (e,u)(f,v) = (e (\bar{u} f)^+, uv),  (e,u)^* = ((e \bar{u})^*, 1),
//   (e,u)^+ = (e,1),                     M(e,u) = (\bar{u}^+, u),
//
// idempotent components manipulated through the closure engine.

#ifndef BIREST_FFBR_HPP_
#define BIREST_FFBR_HPP_

#include <map>
#include <string>
#include <vector>

#include "alphabet.hpp"
#include "automaton.hpp"
#include "stephen.hpp"
#include "term.hpp"

namespace birest {

struct VarietyContext {
  Alphabet alphabet;
  Variety variety = Variety::Free;
  ClosureBudget budget{};
  uint64_t seed = 0;
};

//! e is closed for the variety and rooted with start = end; the barred
//! spelling of u is readable in e from the root (e <= \bar{u}^+),
//! vacuous for u = 1.
struct FFBRElement {
  InverseAutomaton e;
  std::vector<LetterId> u;
  Variety variety = Variety::Free;
};

FFBRElement eval(const TermPtr& t, const VarietyContext& ctx);

//! u-components equal and idempotent graphs birooted-isomorphic.
bool decide_equal(const TermPtr& t1, const TermPtr& t2,
                  const VarietyContext& ctx);
bool decide_equal(const FFBRElement& a, const FFBRElement& b,
                  const Alphabet& al);

//! Natural partial order: u1 = u2 and a morphism graph(e2) -> graph(e1).
bool leq(const TermPtr& t1, const TermPtr& t2, const VarietyContext& ctx);
bool sigma_related(const TermPtr& t1, const TermPtr& t2,
                   const VarietyContext& ctx);
//! (\bar{u}^+, u) for u the sigma-image of t.
FFBRElement max_element(const TermPtr& t, const VarietyContext& ctx);

enum class IdentityScheme {
  A1n,                  // M(x)x^* = x and M(x y^*) = M(x)
  M2,                   // M(x y^*) = M(x) and M(x y^+) = M(x)
  LeftS,                // M(x)M(y) = (M(x))^+ M(xy)
  RightS,               // M(x)M(y) = M(xy) (M(y))^*
  Perf,                 // M(x)M(y) = M(xy)
  BirestrictionAxioms,  // the ten defining identities
};

//! Instantiates every identity of the scheme with the substitution
//! (variables "x" and "y") and decides both sides equal.
bool check_identity(IdentityScheme scheme,
                    const std::map<std::string, TermPtr>& substitution,
                    const VarietyContext& ctx);

enum class OracleVerdict { Equal, Unknown };

//! Independent bounded-derivation search over the defining identities,
//! applied as bidirectional rewrites at arbitrary subterms. Equal if a
//! derivation of length <= depth connects the terms; never asserts
//! inequality. Shares no code path with eval/decide_equal.
OracleVerdict oracle_equal(const TermPtr& t1, const TermPtr& t2,
                           const VarietyContext& ctx, int depth);

//! All terms reachable from t by one rewrite (either direction) of the
//! variety's identities; every neighbour is equal to t in the variety.
std::vector<TermPtr> rewrite_neighbors(const TermPtr& t, Variety v);

//! JSON-like record {variety, u, graph: canonical bytes (hex), ...}.
std::string element_record(const FFBRElement& a, const Alphabet& al);

std::string to_hex(const std::string& bytes);

}  // namespace birest

#endif  // BIREST_FFBR_HPP_
