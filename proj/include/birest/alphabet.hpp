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

#ifndef BIREST_ALPHABET_HPP_
#define BIREST_ALPHABET_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace birest {

using LetterId = uint32_t;

//! The generating set X. Letters are identifiers; the barred copies of
//! positive words over X are materialized lazily elsewhere and never
//! stored here.
class Alphabet {
 public:
  //! Throws std::invalid_argument if empty, duplicated, or a symbol is
  //! not an identifier.
  explicit Alphabet(std::vector<std::string> letters);

  //! Parses a comma-separated list, e.g. "x,y".
  static Alphabet parse(std::string_view text);

  size_t size() const noexcept { return letters_.size(); }

  const std::string& name(LetterId i) const { return letters_.at(i); }

  std::optional<LetterId> find(std::string_view name) const;

  bool operator==(const Alphabet& other) const {
    return letters_ == other.letters_;
  }

 private:
  std::vector<std::string> letters_;
  std::map<std::string, LetterId, std::less<>> index_;
};

}  // namespace birest

#endif  // BIREST_ALPHABET_HPP_
