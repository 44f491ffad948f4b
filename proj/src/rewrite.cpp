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
// Bounded equational search over terms. The defining identities are
// applied as bidirectional rewrites at arbitrary positions; this is the
// independent certifier behind oracle_equal and never touches the
// closure engine.

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "birest/ffbr.hpp"
#include "birest/term.hpp"

namespace birest {

namespace {

using Kind = BiTerm::Kind;

// Pattern variables are Gen nodes with letters above this marker; rule
// terms never collide with real alphabets, which are far smaller.
constexpr LetterId kVarBase = 0x80000000u;
constexpr int kNumVars = 3;

TermPtr pvar(int i) { return t_gen(kVarBase + static_cast<LetterId>(i)); }

bool is_pvar(const TermPtr& t, int* idx) {
  if (t->kind == Kind::Gen && !t->gen.barred
      && t->gen.letters[0] >= kVarBase) {
    *idx = static_cast<int>(t->gen.letters[0] - kVarBase);
    return true;
  }
  return false;
}

using Bindings = std::array<TermPtr, kNumVars>;

bool match(const TermPtr& pat, const TermPtr& t, Bindings& bind) {
  int idx;
  if (is_pvar(pat, &idx)) {
    if (!bind[idx]) {
      bind[idx] = t;
      return true;
    }
    return term_eq(bind[idx], t);
  }
  if (pat->kind != t->kind) {
    return false;
  }
  switch (pat->kind) {
    case Kind::One:
      return true;
    case Kind::Gen:
      return pat->gen == t->gen;
    case Kind::Mul:
      return match(pat->child, t->child, bind)
             && match(pat->right, t->right, bind);
    default:
      return match(pat->child, t->child, bind);
  }
}

TermPtr substitute(const TermPtr& pat, const Bindings& bind) {
  int idx;
  if (is_pvar(pat, &idx)) {
    return bind[idx];
  }
  switch (pat->kind) {
    case Kind::One:
    case Kind::Gen:
      return pat;
    case Kind::Mul:
      return t_mul(substitute(pat->child, bind),
                   substitute(pat->right, bind));
    case Kind::Star:
      return t_star(substitute(pat->child, bind));
    case Kind::Plus:
      return t_plus(substitute(pat->child, bind));
    case Kind::Max:
      return t_max(substitute(pat->child, bind));
  }
  return pat;
}

struct Rule {
  TermPtr lhs, rhs;
};

// Directed rule set (each identity contributes both directions).
const std::vector<Rule>& rules_for(Variety v) {
  static const auto build = [](Variety var) {
    TermPtr x = pvar(0), y = pvar(1), z = pvar(2);
    std::vector<std::pair<TermPtr, TermPtr>> ids = {
        // monoid
        {t_mul(t_mul(x, y), z), t_mul(x, t_mul(y, z))},
        {t_mul(t_one(), x), x},
        {t_mul(x, t_one()), x},
        // restriction
        {t_mul(x, t_star(x)), x},
        {t_mul(t_star(x), t_star(y)), t_mul(t_star(y), t_star(x))},
        {t_star(t_mul(x, t_star(y))), t_mul(t_star(x), t_star(y))},
        {t_mul(t_star(x), y), t_mul(y, t_star(t_mul(x, y)))},
        // corestriction
        {t_mul(t_plus(x), x), x},
        {t_mul(t_plus(x), t_plus(y)), t_mul(t_plus(y), t_plus(x))},
        {t_plus(t_mul(t_plus(x), y)), t_mul(t_plus(x), t_plus(y))},
        {t_mul(x, t_plus(y)), t_mul(t_plus(t_mul(x, y)), x)},
        // the two unary operations agree on projections
        {t_star(t_plus(x)), t_plus(x)},
        {t_plus(t_star(x)), t_star(x)},
        // F-identities
        {t_mul(t_max(x), t_star(x)), x},
        {t_max(t_mul(x, t_star(y))), t_max(x)},
    };
    if (var == Variety::LS || var == Variety::S) {
      ids.push_back({t_mul(t_max(x), t_max(y)),
                     t_mul(t_plus(t_max(x)), t_max(t_mul(x, y)))});
    }
    if (var == Variety::RS || var == Variety::S) {
      ids.push_back({t_mul(t_max(x), t_max(y)),
                     t_mul(t_max(t_mul(x, y)), t_star(t_max(y)))});
    }
    if (var == Variety::P) {
      ids.push_back({t_mul(t_max(x), t_max(y)), t_max(t_mul(x, y))});
    }
    std::vector<Rule> out;
    for (const auto& [l, r] : ids) {
      out.push_back({l, r});
      out.push_back({r, l});
    }
    return out;
  };
  static const std::vector<Rule> free_rules = build(Variety::Free);
  static const std::vector<Rule> ls_rules = build(Variety::LS);
  static const std::vector<Rule> rs_rules = build(Variety::RS);
  static const std::vector<Rule> s_rules = build(Variety::S);
  static const std::vector<Rule> p_rules = build(Variety::P);
  switch (v) {
    case Variety::Free: return free_rules;
    case Variety::LS: return ls_rules;
    case Variety::RS: return rs_rules;
    case Variety::S: return s_rules;
    case Variety::P: return p_rules;
  }
  return free_rules;
}

void rewrites_here(const TermPtr& t, Variety v, std::vector<TermPtr>& out) {
  for (const auto& rule : rules_for(v)) {
    Bindings bind{};
    if (match(rule.lhs, t, bind)) {
      // a reversed rule may leave a variable unbound (e.g. expanding
      // M(x) to M(x y^*)); the identity instance with y = 1 is still one
      for (auto& b : bind) {
        if (!b) {
          b = t_one();
        }
      }
      out.push_back(substitute(rule.rhs, bind));
    }
  }
}

void neighbors_into(const TermPtr& t, Variety v,
                    const std::function<TermPtr(TermPtr)>& rebuild,
                    std::vector<TermPtr>& out) {
  std::vector<TermPtr> here;
  rewrites_here(t, v, here);
  for (auto& n : here) {
    out.push_back(rebuild(std::move(n)));
  }
  switch (t->kind) {
    case Kind::Mul:
      neighbors_into(
          t->child, v,
          [&](TermPtr n) { return rebuild(t_mul(std::move(n), t->right)); },
          out);
      neighbors_into(
          t->right, v,
          [&](TermPtr n) { return rebuild(t_mul(t->child, std::move(n))); },
          out);
      break;
    case Kind::Star:
      neighbors_into(
          t->child, v,
          [&](TermPtr n) { return rebuild(t_star(std::move(n))); }, out);
      break;
    case Kind::Plus:
      neighbors_into(
          t->child, v,
          [&](TermPtr n) { return rebuild(t_plus(std::move(n))); }, out);
      break;
    case Kind::Max:
      neighbors_into(
          t->child, v,
          [&](TermPtr n) { return rebuild(t_max(std::move(n))); }, out);
      break;
    default:
      break;
  }
}

// Name-free canonical key for visited sets.
void key_into(const TermPtr& t, std::string& out) {
  switch (t->kind) {
    case Kind::One:
      out += '1';
      break;
    case Kind::Gen:
      out += t->gen.barred ? 'B' : 'G';
      for (LetterId x : t->gen.letters) {
        out += std::to_string(x);
        out += ',';
      }
      break;
    case Kind::Mul:
      out += '(';
      key_into(t->child, out);
      out += ' ';
      key_into(t->right, out);
      out += ')';
      break;
    case Kind::Star:
      key_into(t->child, out);
      out += '*';
      break;
    case Kind::Plus:
      key_into(t->child, out);
      out += '+';
      break;
    case Kind::Max:
      out += "M(";
      key_into(t->child, out);
      out += ')';
      break;
  }
}

std::string term_key(const TermPtr& t) {
  std::string out;
  key_into(t, out);
  return out;
}

struct Ball {
  std::set<std::string> seen;
  std::deque<TermPtr> frontier;
  bool capped = false;

  explicit Ball(const TermPtr& t) {
    seen.insert(term_key(t));
    frontier.push_back(t);
  }

  // Expands by one derivation step; returns true if any key is in other.
  bool expand(Variety v, size_t cap, const std::set<std::string>& other) {
    std::deque<TermPtr> next;
    bool hit = false;
    while (!frontier.empty()) {
      TermPtr t = frontier.front();
      frontier.pop_front();
      std::vector<TermPtr> ns;
      neighbors_into(
          t, v, [](TermPtr n) { return n; }, ns);
      for (auto& n : ns) {
        std::string k = term_key(n);
        if (seen.count(k)) {
          continue;
        }
        if (seen.size() >= cap) {
          capped = true;
          break;
        }
        seen.insert(k);
        if (other.count(k)) {
          hit = true;
        }
        next.push_back(std::move(n));
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

std::vector<TermPtr> rewrite_neighbors(const TermPtr& t, Variety v) {
  std::vector<TermPtr> out;
  neighbors_into(
      t, v, [](TermPtr n) { return n; }, out);
  return out;
}

OracleVerdict oracle_equal(const TermPtr& t1, const TermPtr& t2,
                           const VarietyContext& ctx, int depth) {
  if (depth < 1) {
    throw std::invalid_argument("oracle depth must be >= 1");
  }
  if (term_eq(t1, t2)) {
    return OracleVerdict::Equal;
  }
  constexpr size_t kCap = 20000;
  Ball ball1(t1), ball2(t2);
  if (ball1.seen.count(term_key(t2))) {
    return OracleVerdict::Equal;
  }
  int steps1 = (depth + 1) / 2;
  int steps2 = depth / 2;
  for (int i = 0; i < std::max(steps1, steps2); ++i) {
    if (i < steps1
        && ball1.expand(ctx.variety, kCap, ball2.seen)) {
      return OracleVerdict::Equal;
    }
    if (i < steps2
        && ball2.expand(ctx.variety, kCap, ball1.seen)) {
      return OracleVerdict::Equal;
    }
    if (ball1.frontier.empty() && ball2.frontier.empty()) {
      break;
    }
  }
  return OracleVerdict::Unknown;
}

}  // namespace birest
