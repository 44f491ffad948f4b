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

#ifndef BIREST_ERRORS_HPP_
#define BIREST_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace birest {

//! Thrown on malformed input text; carries the offending position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}

  size_t position() const noexcept { return pos_; }

 private:
  size_t pos_;
};

//! Thrown when a closure exceeds its event budget. Signals either a
//! pathological input or a bug; never silently truncates a closure.
class BudgetExhaustedError : public std::runtime_error {
 public:
  explicit BudgetExhaustedError(uint64_t max_events)
      : std::runtime_error("closure budget exhausted after "
                           + std::to_string(max_events) + " events") {}
};

//! Thrown by the dual-model crosscheck when the two perfect-case models
//! disagree on a pair; names the pair so the bug can be reproduced.
class DiscrepancyError : public std::runtime_error {
 public:
  DiscrepancyError(const std::string& lhs, const std::string& rhs)
      : std::runtime_error("model discrepancy on pair \"" + lhs + "\" vs \""
                           + rhs + "\"") {}
};

}  // namespace birest

#endif  // BIREST_ERRORS_HPP_
