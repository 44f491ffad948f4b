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

#include "birest/word_oracle.hpp"

#include <deque>

namespace birest {

namespace {

std::string word_key(const SignedWord& w) {
  std::string out;
  for (const auto& sl : w) {
    out += sl.base.barred ? 'B' : 'P';
    for (LetterId x : sl.base.letters) {
      out += std::to_string(x);
      out += ',';
    }
    if (sl.inverse) {
      out += '\'';
    }
    out += ';';
  }
  return out;
}

SignedWord slice(const SignedWord& w, size_t b, size_t len) {
  return SignedWord(w.begin() + b, w.begin() + b + len);
}

SignedWord splice(const SignedWord& w, size_t b, size_t len,
                  const SignedWord& repl) {
  SignedWord out(w.begin(), w.begin() + b);
  out.insert(out.end(), repl.begin(), repl.end());
  out.insert(out.end(), w.begin() + b + len, w.end());
  return out;
}

SignedWord cat(std::initializer_list<SignedWord> parts) {
  SignedWord out;
  for (const auto& p : parts) {
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

bool pos_barred(const SignedLetter& sl) {
  return sl.base.barred && !sl.inverse;
}
bool neg_barred(const SignedLetter& sl) {
  return sl.base.barred && sl.inverse;
}

std::vector<LetterId> concat_letters(const std::vector<LetterId>& a,
                                     const std::vector<LetterId>& b) {
  std::vector<LetterId> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// All words one derivation step away from w.
std::vector<SignedWord> word_neighbors(const SignedWord& w, Variety v,
                                       size_t max_factor_len) {
  std::vector<SignedWord> out;
  size_t n = w.size();

  // Wagner: p <-> p p^{-1} p
  for (size_t i = 0; i < n; ++i) {
    for (size_t len = 1; len <= max_factor_len && i + len <= n; ++len) {
      SignedWord p = slice(w, i, len);
      SignedWord pinv = involutive_inverse(p);
      out.push_back(splice(w, i, len, cat({p, pinv, p})));
      if (i + 3 * len <= n && slice(w, i + len, len) == pinv
          && slice(w, i + 2 * len, len) == p) {
        out.push_back(splice(w, i, 3 * len, p));
      }
    }
  }
  // Wagner: p p^{-1} q q^{-1} <-> q q^{-1} p p^{-1}
  for (size_t i = 0; i < n; ++i) {
    for (size_t lp = 1; lp <= max_factor_len && i + 2 * lp <= n; ++lp) {
      SignedWord p = slice(w, i, lp);
      if (slice(w, i + lp, lp) != involutive_inverse(p)) {
        continue;
      }
      size_t j = i + 2 * lp;
      for (size_t lq = 1; lq <= max_factor_len && j + 2 * lq <= n; ++lq) {
        SignedWord q = slice(w, j, lq);
        if (slice(w, j + lq, lq) != involutive_inverse(q)) {
          continue;
        }
        SignedWord pp = slice(w, i, 2 * lp);
        SignedWord qq = slice(w, j, 2 * lq);
        out.push_back(splice(w, i, 2 * (lp + lq), cat({qq, pp})));
      }
    }
  }

  // relation x = x x^{-1} \bar{x}, both directions and inverted forms
  for (size_t i = 0; i < n; ++i) {
    const SignedLetter& sl = w[i];
    if (!sl.base.barred) {
      LetterId x = sl.base.letters[0];
      SignedLetter xp{Label::plain(x), false}, xm{Label::plain(x), true};
      SignedLetter bp{Label::barred_word({x}), false},
          bm{Label::barred_word({x}), true};
      if (!sl.inverse) {
        out.push_back(splice(w, i, 1, {xp, xm, bp}));
      } else {
        out.push_back(splice(w, i, 1, {bm, xp, xm}));
      }
      if (!sl.inverse && i + 3 <= n && w[i + 1] == xm && w[i + 2] == bp) {
        out.push_back(splice(w, i, 3, {xp}));
      }
      (void) bm;
    }
    if (sl.base.barred && sl.base.letters.size() == 1 && sl.inverse
        && i + 3 <= n) {
      LetterId x = sl.base.letters[0];
      SignedLetter xp{Label::plain(x), false}, xm{Label::plain(x), true};
      if (w[i + 1] == xp && w[i + 2] == xm) {
        out.push_back(splice(w, i, 3, {xm}));
      }
    }
  }
  if (v == Variety::P) {
    return out;
  }

  // relation \bar{u} \bar{v} = \bar{u} \bar{v} (\bar{u} \bar{v})^{-1}
  // \bar{uv} and the strong/left/right variants
  bool ls = v == Variety::LS || v == Variety::S;
  bool rs = v == Variety::RS || v == Variety::S;
  for (size_t i = 0; i + 2 <= n; ++i) {
    if (pos_barred(w[i]) && pos_barred(w[i + 1])) {
      SignedLetter bu = w[i], bv = w[i + 1];
      SignedLetter buv{
          Label::barred_word(concat_letters(bu.base.letters, bv.base.letters)),
          false};
      SignedLetter bui = bu, bvi = bv;
      bui.inverse = bvi.inverse = true;
      out.push_back(splice(w, i, 2, {bu, bv, bvi, bui, buv}));
      if (ls) {
        out.push_back(splice(w, i, 2, {bu, bui, buv}));
      }
      if (rs) {
        out.push_back(splice(w, i, 2, {buv, bvi, bv}));
      }
    }
    if (neg_barred(w[i]) && neg_barred(w[i + 1])) {
      // v^-1 u^-1, the inverse of uv
      SignedLetter bvi = w[i], bui = w[i + 1];
      SignedLetter bv = bvi, bu = bui;
      bv.inverse = bu.inverse = false;
      SignedLetter buvi{
          Label::barred_word(concat_letters(bu.base.letters, bv.base.letters)),
          true};
      out.push_back(splice(w, i, 2, {buvi, bu, bv, bvi, bui}));
      if (ls) {
        out.push_back(splice(w, i, 2, {buvi, bu, bui}));
      }
      if (rs) {
        out.push_back(splice(w, i, 2, {bvi, bv, buvi}));
      }
    }
  }
  // contracting directions: locate the long side, emit the short one
  for (size_t i = 0; i < n; ++i) {
    // u v v^-1 u^-1 w(=uv)  ->  u v
    if (i + 5 <= n && pos_barred(w[i]) && pos_barred(w[i + 1])
        && neg_barred(w[i + 2]) && neg_barred(w[i + 3])
        && pos_barred(w[i + 4])) {
      const auto& u = w[i].base.letters;
      const auto& vv = w[i + 1].base.letters;
      if (w[i + 2].base.letters == vv && w[i + 3].base.letters == u
          && w[i + 4].base.letters == concat_letters(u, vv)) {
        out.push_back(splice(w, i, 5, {w[i], w[i + 1]}));
      }
    }
    // w(=uv)^-1 u v v^-1 u^-1  ->  v^-1 u^-1
    if (i + 5 <= n && neg_barred(w[i]) && pos_barred(w[i + 1])
        && pos_barred(w[i + 2]) && neg_barred(w[i + 3])
        && neg_barred(w[i + 4])) {
      const auto& u = w[i + 1].base.letters;
      const auto& vv = w[i + 2].base.letters;
      if (w[i + 3].base.letters == vv && w[i + 4].base.letters == u
          && w[i].base.letters == concat_letters(u, vv)) {
        out.push_back(splice(w, i, 5, {w[i + 3], w[i + 4]}));
      }
    }
    if (ls) {
      // u u^-1 w(=uv)  ->  u v
      if (i + 3 <= n && pos_barred(w[i]) && neg_barred(w[i + 1])
          && pos_barred(w[i + 2])
          && w[i].base.letters == w[i + 1].base.letters) {
        const auto& u = w[i].base.letters;
        const auto& uv = w[i + 2].base.letters;
        if (u.size() < uv.size()
            && std::equal(u.begin(), u.end(), uv.begin())) {
          std::vector<LetterId> rest(uv.begin() + u.size(), uv.end());
          out.push_back(splice(
              w, i, 3,
              {w[i], SignedLetter{Label::barred_word(rest), false}}));
        }
      }
      // w(=uv)^-1 u u^-1  ->  v^-1 u^-1
      if (i + 3 <= n && neg_barred(w[i]) && pos_barred(w[i + 1])
          && neg_barred(w[i + 2])
          && w[i + 1].base.letters == w[i + 2].base.letters) {
        const auto& u = w[i + 1].base.letters;
        const auto& uv = w[i].base.letters;
        if (u.size() < uv.size()
            && std::equal(u.begin(), u.end(), uv.begin())) {
          std::vector<LetterId> rest(uv.begin() + u.size(), uv.end());
          out.push_back(splice(
              w, i, 3,
              {SignedLetter{Label::barred_word(rest), true}, w[i + 2]}));
        }
      }
    }
    if (rs) {
      // w(=uv) v^-1 v  ->  u v
      if (i + 3 <= n && pos_barred(w[i]) && neg_barred(w[i + 1])
          && pos_barred(w[i + 2])
          && w[i + 1].base.letters == w[i + 2].base.letters) {
        const auto& vv = w[i + 1].base.letters;
        const auto& uv = w[i].base.letters;
        if (vv.size() < uv.size()
            && std::equal(vv.rbegin(), vv.rend(), uv.rbegin())) {
          std::vector<LetterId> front(uv.begin(), uv.end() - vv.size());
          out.push_back(splice(
              w, i, 3,
              {SignedLetter{Label::barred_word(front), false}, w[i + 2]}));
        }
      }
      // v^-1 v w(=uv)^-1  ->  v^-1 u^-1
      if (i + 3 <= n && neg_barred(w[i]) && pos_barred(w[i + 1])
          && neg_barred(w[i + 2])
          && w[i].base.letters == w[i + 1].base.letters) {
        const auto& vv = w[i].base.letters;
        const auto& uv = w[i + 2].base.letters;
        if (vv.size() < uv.size()
            && std::equal(vv.rbegin(), vv.rend(), uv.rbegin())) {
          std::vector<LetterId> front(uv.begin(), uv.end() - vv.size());
          out.push_back(splice(
              w, i, 3,
              {w[i], SignedLetter{Label::barred_word(front), true}}));
        }
      }
    }
  }
  return out;
}

struct WordBall {
  std::set<std::string> seen;
  std::deque<SignedWord> frontier;
  bool capped = false;

  explicit WordBall(const SignedWord& w) {
    seen.insert(word_key(w));
    frontier.push_back(w);
  }

  bool expand(Variety v, const WordOracleOptions& opts,
              const std::set<std::string>& other) {
    std::deque<SignedWord> next;
    bool hit = false;
    while (!frontier.empty()) {
      SignedWord w = frontier.front();
      frontier.pop_front();
      for (auto& nb : word_neighbors(w, v, opts.max_factor_len)) {
        if (nb.size() > opts.max_word_len) {
          continue;
        }
        std::string k = word_key(nb);
        if (seen.count(k)) {
          continue;
        }
        if (seen.size() >= opts.max_states_per_side) {
          capped = true;
          break;
        }
        seen.insert(k);
        if (other.count(k)) {
          hit = true;
        }
        next.push_back(std::move(nb));
      }
      if (capped) {
        break;
      }
    }
    frontier.swap(next);
    return hit;
  }
};

}  // namespace

OracleVerdict word_oracle_equal(const SignedWord& w1, const SignedWord& w2,
                                Variety v, const Alphabet& a,
                                const WordOracleOptions& opts) {
  (void) a;
  SignedWord u1 = v == Variety::P ? expand_barred(w1) : w1;
  SignedWord u2 = v == Variety::P ? expand_barred(w2) : w2;
  if (u1 == u2) {
    return OracleVerdict::Equal;
  }
  WordBall b1(u1), b2(u2);
  int steps1 = (opts.depth + 1) / 2;
  int steps2 = opts.depth / 2;
  for (int i = 0; i < std::max(steps1, steps2); ++i) {
    if (i < steps1 && b1.expand(v, opts, b2.seen)) {
      return OracleVerdict::Equal;
    }
    if (i < steps2 && b2.expand(v, opts, b1.seen)) {
      return OracleVerdict::Equal;
    }
    if (b1.frontier.empty() && b2.frontier.empty()) {
      break;
    }
  }
  return OracleVerdict::Unknown;
}

std::set<std::string> derivation_ball(const SignedWord& w, Variety v,
                                      const Alphabet& a, int depth,
                                      size_t max_states, size_t max_word_len,
                                      size_t max_factor_len) {
  (void) a;
  WordOracleOptions opts;
  opts.max_states_per_side = max_states;
  opts.max_word_len = max_word_len;
  opts.max_factor_len = max_factor_len;
  SignedWord u = v == Variety::P ? expand_barred(w) : w;
  WordBall ball(u);
  std::set<std::string> empty;
  for (int i = 0; i < depth && !ball.frontier.empty(); ++i) {
    ball.expand(v, opts, empty);
  }
  return std::move(ball.seen);
}

}  // namespace birest
