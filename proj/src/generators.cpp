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

#include "birest/generators.hpp"

#include <map>

#include "birest/ffbr.hpp"

namespace birest {

std::vector<LetterId> random_positive_word(Rng& rng, const Alphabet& a,
                                           size_t max_len, bool nonempty) {
  size_t len = nonempty ? 1 + rng.below(max_len) : rng.below(max_len + 1);
  std::vector<LetterId> out;
  out.reserve(len);
  for (size_t i = 0; i < len; ++i) {
    out.push_back(static_cast<LetterId>(rng.below(a.size())));
  }
  return out;
}

SignedWord random_plain_signed_word(Rng& rng, const Alphabet& a,
                                    size_t max_len) {
  size_t len = rng.below(max_len + 1);
  SignedWord out;
  out.reserve(len);
  for (size_t i = 0; i < len; ++i) {
    out.push_back(
        SignedLetter{Label::plain(static_cast<LetterId>(rng.below(a.size()))),
                     rng.flip()});
  }
  return out;
}

SignedWord random_extended_signed_word(Rng& rng, const Alphabet& a,
                                       size_t max_len,
                                       size_t max_barred_len) {
  size_t len = rng.below(max_len + 1);
  SignedWord out;
  out.reserve(len);
  for (size_t i = 0; i < len; ++i) {
    Label base;
    if (rng.flip()) {
      base = Label::plain(static_cast<LetterId>(rng.below(a.size())));
    } else {
      base = Label::barred_word(random_positive_word(
          rng, a, max_barred_len, /*nonempty=*/true));
    }
    out.push_back(SignedLetter{std::move(base), rng.flip()});
  }
  return out;
}

namespace {

TermPtr random_term_sized(Rng& rng, const Alphabet& a,
                          const TermGenOptions& opts, size_t size) {
  if (size <= 1) {
    size_t roll = rng.below(10);
    if (roll == 0) {
      return t_one();
    }
    if (opts.allow_barred_gen && roll == 1) {
      return t_gen(Label::barred_word(
          random_positive_word(rng, a, opts.max_barred_len, true)));
    }
    return t_gen(static_cast<LetterId>(rng.below(a.size())));
  }
  size_t roll = rng.below(10);
  if (roll < 4) {
    size_t left = 1 + rng.below(size - 1);
    return t_mul(random_term_sized(rng, a, opts, left),
                 random_term_sized(rng, a, opts, size - left));
  }
  if (roll < 6) {
    return t_star(random_term_sized(rng, a, opts, size - 1));
  }
  if (roll < 8) {
    return t_plus(random_term_sized(rng, a, opts, size - 1));
  }
  if (opts.allow_max) {
    return t_max(random_term_sized(rng, a, opts, size - 1));
  }
  return t_mul(random_term_sized(rng, a, opts, 1),
               random_term_sized(rng, a, opts, size - 1));
}

}  // namespace

TermPtr random_term(Rng& rng, const Alphabet& a, const TermGenOptions& opts) {
  return random_term_sized(rng, a, opts, 1 + rng.below(opts.max_size));
}

namespace {

void trivial_into(Rng& rng, const std::vector<Label>& pool,
                  const std::map<std::vector<LetterId>, std::vector<size_t>>&
                      by_value,
                  size_t depth, size_t max_blocks, SignedWord& out) {
  if (depth == 0) {
    return;
  }
  size_t blocks = 1 + rng.below(max_blocks);
  for (size_t i = 0; i < blocks; ++i) {
    auto it = by_value.begin();
    std::advance(it, rng.below(by_value.size()));
    const auto& cls = it->second;
    const Label& l = pool[cls[rng.below(cls.size())]];
    const Label& m = pool[cls[rng.below(cls.size())]];
    bool sign = rng.flip();
    out.push_back(SignedLetter{l, sign});
    trivial_into(rng, pool, by_value, depth - 1, max_blocks, out);
    out.push_back(SignedLetter{m, !sign});
  }
}

}  // namespace

SignedWord random_trivial_value_word(Rng& rng,
                                     const std::vector<Label>& letter_pool,
                                     size_t depth, size_t max_blocks) {
  // letters with the same assignment-map value are interchangeable ends
  // of a conjugating block
  std::map<std::vector<LetterId>, std::vector<size_t>> by_value;
  for (size_t i = 0; i < letter_pool.size(); ++i) {
    by_value[letter_pool[i].letters].push_back(i);
  }
  SignedWord out;
  trivial_into(rng, letter_pool, by_value, depth, max_blocks, out);
  return out;
}

TermPtr mutate_equal(Rng& rng, const TermPtr& t, Variety v, int steps) {
  TermPtr cur = t;
  size_t limit = term_size(t) + 8;
  for (int i = 0; i < steps; ++i) {
    auto all = rewrite_neighbors(cur, v);
    std::vector<TermPtr> small;
    for (auto& n : all) {
      if (term_size(n) <= limit) {
        small.push_back(std::move(n));
      }
    }
    if (small.empty()) {
      break;
    }
    cur = small[rng.below(small.size())];
  }
  return cur;
}

}  // namespace birest
