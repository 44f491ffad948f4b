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
// Innards shared by folding and the closure engine. Vertex ids stay
// stable through a whole closure run (merges go through the union-find,
// compaction happens once at the end), so trace events can refer to them.

#ifndef BIREST_DETAIL_FOLD_HPP_
#define BIREST_DETAIL_FOLD_HPP_

#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "../automaton.hpp"

namespace birest::detail {

class Dsu {
 public:
  explicit Dsu(size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  uint32_t find(uint32_t v) const {
    while (parent_[v] != v) {
      v = parent_[v];
    }
    return v;
  }

  //! Smaller id stays the representative.
  void unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return;
    }
    if (b < a) {
      std::swap(a, b);
    }
    parent_[b] = a;
  }

  uint32_t add() {
    parent_.push_back(static_cast<uint32_t>(parent_.size()));
    return parent_.back();
  }

  size_t size() const noexcept { return parent_.size(); }

 private:
  mutable std::vector<uint32_t> parent_;
};

struct FoldWork {
  Dsu uf;
  std::set<InverseAutomaton::Edge> edges;
  InverseAutomaton::Vertex start;
  InverseAutomaton::Vertex end;

  explicit FoldWork(const InverseAutomaton& a);

  //! Canonicalizes endpoints through the union-find, then reports one
  //! determinism clash as a pending merge, if any.
  bool fold_step(InverseAutomaton::Vertex* keep,
                 InverseAutomaton::Vertex* gone);

  void merge(InverseAutomaton::Vertex keep, InverseAutomaton::Vertex gone);

  //! Compacts representatives to contiguous ids.
  InverseAutomaton to_automaton() const;
};

//! Name-free canonical bytes (letters encoded by id); equal iff the
//! automata are birooted-isomorphic. The alphabet-named export lives in
//! canonical_serialize.
std::string canonical_bytes(const InverseAutomaton& a);

}  // namespace birest::detail

#endif  // BIREST_DETAIL_FOLD_HPP_
