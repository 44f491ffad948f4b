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
// Variety-specific closure of inverse automata: folding interleaved with
// elementary expansions. Closure rules per variety (labels \bar{u} are
// barred, x plain):
//
//   R1 (all varieties): edge (a,x,b) present, (a,\bar{x},b) absent
//       -> add (a,\bar{x},b)
//   R2 (Free, LS, RS, S): edges (a,\bar{u},b), (b,\bar{v},c) present,
//       (a,\bar{uv},c) absent -> add it
//   R3 (LS, S): edges (a,\bar{u},b), (a,\bar{uv},c) present,
//       (b,\bar{v},c) absent -> add it
//   R4 (RS, S): edges (b,\bar{v},c), (a,\bar{uv},c) present,
//       (a,\bar{u},b) absent -> add it
//
// The perfect variety runs over the X u \bar{X} alphabet with R1 as the
// only rule; compound barred labels in its inputs are pre-expanded into
// chains of single barred letters.

#ifndef BIREST_STEPHEN_HPP_
#define BIREST_STEPHEN_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "automaton.hpp"
#include "words.hpp"

namespace birest {

enum class Variety { Free, LS, RS, S, P };

std::string variety_name(Variety v);
std::optional<Variety> parse_variety(std::string_view name);

//! Safeguard around the closure's termination argument: converts a
//! runaway closure into a diagnosable BudgetExhaustedError.
struct ClosureBudget {
  uint64_t max_events = 100000;
};

struct TraceEvent {
  enum class Kind { Fold, R1, R2, R3, R4 };

  Kind kind;
  InverseAutomaton::Vertex a = 0;  // Fold: kept vertex; rules: alpha
  InverseAutomaton::Vertex b = 0;  // Fold: merged-away vertex; rules: beta
  InverseAutomaton::Vertex c = 0;  // rules with three witnesses: gamma
  Label lab;                       // rules: the added edge's label
};

//! Replaying the events from the input reproduces the output; tested.
struct ClosureTrace {
  std::vector<TraceEvent> events;

  //! One event per line: "RULE alpha beta gamma label".
  std::string to_text(const Alphabet& a) const;
};

struct Closure {
  InverseAutomaton graph;
  ClosureTrace trace;
};

//! Deterministic policy applies the first applicable instance in
//! (FOLD > R1 > R2 > R3 > R4, canonical edge order); a seeded policy
//! picks a random applicable instance and exists so that order
//! independence can be tested rather than assumed.
struct WorklistPolicy {
  std::optional<uint64_t> shuffle_seed;
};

//! Folds and closes a under the rules of v. For Free/LS/RS/S the vertex
//! count never exceeds the folded input's. Throws BudgetExhaustedError.
Closure close(const InverseAutomaton& a, Variety v, const ClosureBudget& budget,
              const WorklistPolicy& policy = {});

//! Linear graph of w (pre-expanded for the perfect variety), closed.
Closure closure_of_word(const SignedWord& w, Variety v,
                        const ClosureBudget& budget,
                        const WorklistPolicy& policy = {});

//! [w1] = [w2] in the universal inverse monoid of the variety: each
//! closed birooted automaton accepts the other's word.
bool decide_equal_inv(const SignedWord& w1, const SignedWord& w2, Variety v,
                      const ClosureBudget& budget);

//! decide_equal_inv(w, ww).
bool is_idempotent(const SignedWord& w, Variety v, const ClosureBudget& budget);

//! Automaton arithmetic on closed inputs; outputs are closed.
InverseAutomaton mul_inv(const InverseAutomaton& a, const InverseAutomaton& b,
                         Variety v, const ClosureBudget& budget);
//! Re-root at (end, end): the element a^{-1}a.
InverseAutomaton star_inv(const InverseAutomaton& a);
//! Re-root at (start, start): the element aa^{-1}.
InverseAutomaton plus_inv(const InverseAutomaton& a);

//! The barred spelling of a positive word u in the given variety: the
//! single letter [u] (empty word for u = 1), except that the perfect
//! variety spells [x_1]...[x_n].
SignedWord max_generator_word(const std::vector<LetterId>& u, Variety v);

}  // namespace birest

#endif  // BIREST_STEPHEN_HPP_
