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
// Named property suites behind the CLI and the acceptance run. Cases may
// execute in parallel; results are ordered by case index and every suite
// is deterministic given (seed, alphabet, variety, budget).

#ifndef BIREST_SUITES_HPP_
#define BIREST_SUITES_HPP_

#include <string>
#include <vector>

#include "ffbr.hpp"

namespace birest {

struct SuiteResult {
  std::string name;
  size_t cases = 0;
  size_t failures = 0;
  std::vector<std::string> failure_messages;

  bool ok() const noexcept { return failures == 0; }
};

//! Variety identities: birestriction axioms, the F-identities and M2
//! everywhere; the left-strong/right-strong/perfect identities exactly in
//! their owning varieties, with pinned counterexamples outside them.
SuiteResult suite_identities(const VarietyContext& ctx, size_t cases = 200);

//! D-map laws and the worked projection example, via fbr_equal.
SuiteResult suite_dmap(const VarietyContext& ctx, size_t cases = 100);

//! Word-level bounded-derivation agreement with decide_equal_inv on the
//! small one-letter universe, plus term-oracle soundness samples.
SuiteResult suite_oracle(const VarietyContext& ctx, size_t cases = 50);

//! Closure confluence under worklist shuffles and closure idempotence.
SuiteResult suite_confluence(const VarietyContext& ctx, size_t inputs = 20,
                             size_t shuffles = 10);

//! Trivial-group-value words are idempotent: perfect variety over two
//! letters, left/right/strong varieties over one letter.
SuiteResult suite_eunitary(const VarietyContext& ctx, size_t cases = 100);

//! Dual-model agreement of the Cayley-subgraph model and the closure
//! engine in the perfect variety.
SuiteResult suite_perfect_crosscheck(const VarietyContext& ctx,
                                     size_t pairs = 500);

//! Dispatch by name: identities, dmap, oracle, confluence, eunitary,
//! perfect-crosscheck. Throws std::invalid_argument on unknown names.
SuiteResult run_suite(const std::string& name, const VarietyContext& ctx);

}  // namespace birest

#endif  // BIREST_SUITES_HPP_
