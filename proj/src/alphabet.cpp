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

#include "birest/alphabet.hpp"

#include <cctype>
#include <stdexcept>

namespace birest {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') {
    return false;
  }
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
      return false;
    }
  }
  return true;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> letters)
    : letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw std::invalid_argument("alphabet must be nonempty");
  }
  for (LetterId i = 0; i < letters_.size(); ++i) {
    if (!is_identifier(letters_[i])) {
      throw std::invalid_argument("alphabet symbol \"" + letters_[i]
                                  + "\" is not an identifier");
    }
    auto [it, inserted] = index_.emplace(letters_[i], i);
    if (!inserted) {
      throw std::invalid_argument("duplicate alphabet symbol \"" + letters_[i]
                                  + "\"");
    }
  }
}

Alphabet Alphabet::parse(std::string_view text) {
  std::vector<std::string> letters;
  std::string cur;
  auto push = [&]() {
    size_t b = cur.find_first_not_of(" \t");
    size_t e = cur.find_last_not_of(" \t");
    if (b == std::string::npos) {
      throw std::invalid_argument("empty symbol in alphabet list");
    }
    letters.push_back(cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') {
      push();
    } else {
      cur += c;
    }
  }
  push();
  return Alphabet(std::move(letters));
}

std::optional<LetterId> Alphabet::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

}  // namespace birest
