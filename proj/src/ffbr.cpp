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

#include "birest/ffbr.hpp"

#include <cassert>
#include <stdexcept>

#include "birest/detail/fold.hpp"

namespace birest {

namespace {

InverseAutomaton trivial_graph() { return InverseAutomaton(); }

// Closed birooted automaton of the barred spelling of u.
InverseAutomaton barred_automaton(const std::vector<LetterId>& u,
                                  const VarietyContext& ctx) {
  return close(linear_graph(max_generator_word(u, ctx.variety)), ctx.variety,
               ctx.budget)
      .graph;
}

// The barred spelling of u is readable from the root: e <= \bar{u}^+.
bool spelling_readable(const InverseAutomaton& e,
                       const std::vector<LetterId>& u, Variety v) {
  InverseAutomaton::Vertex cur = e.start();
  for (const auto& sl : max_generator_word(u, v)) {
    auto next = e.step(cur, sl.base);
    if (!next) {
      return false;
    }
    cur = *next;
  }
  return true;
}

FFBRElement make_element(InverseAutomaton e, std::vector<LetterId> u,
                         const VarietyContext& ctx) {
  FFBRElement out{std::move(e), std::move(u), ctx.variety};
  if (out.e.start() != out.e.end()
      || !spelling_readable(out.e, out.u, ctx.variety)) {
    throw std::logic_error("coordinate invariant violated: e <= \\bar{u}^+");
  }
  return out;
}

}  // namespace

FFBRElement eval(const TermPtr& t, const VarietyContext& ctx) {
  using Kind = BiTerm::Kind;
  switch (t->kind) {
    case Kind::One:
      return make_element(trivial_graph(), {}, ctx);
    case Kind::Gen: {
      if (t->gen.barred) {
        // [u] denotes M(u): the element (\bar{u}^+, u)
        return make_element(plus_inv(barred_automaton(t->gen.letters, ctx)),
                            t->gen.letters, ctx);
      }
      auto aut = close(linear_graph({SignedLetter{t->gen, false}}),
                       ctx.variety, ctx.budget)
                     .graph;
      return make_element(plus_inv(aut), t->gen.letters, ctx);
    }
    case Kind::Mul: {
      FFBRElement a = eval(t->child, ctx);
      FFBRElement b = eval(t->right, ctx);
      // (e,u)(f,v) = (e (\bar{u} f)^+, uv)
      InverseAutomaton g =
          a.u.empty() ? b.e
                      : plus_inv(mul_inv(barred_automaton(a.u, ctx), b.e,
                                         ctx.variety, ctx.budget));
      InverseAutomaton e = mul_inv(a.e, g, ctx.variety, ctx.budget);
      std::vector<LetterId> u = a.u;
      u.insert(u.end(), b.u.begin(), b.u.end());
      return make_element(std::move(e), std::move(u), ctx);
    }
    case Kind::Star: {
      FFBRElement a = eval(t->child, ctx);
      // (e,u)^* = ((e \bar{u})^*, 1)
      if (a.u.empty()) {
        return make_element(std::move(a.e), {}, ctx);
      }
      InverseAutomaton m =
          mul_inv(a.e, barred_automaton(a.u, ctx), ctx.variety, ctx.budget);
      return make_element(star_inv(m), {}, ctx);
    }
    case Kind::Plus: {
      FFBRElement a = eval(t->child, ctx);
      return make_element(std::move(a.e), {}, ctx);
    }
    case Kind::Max: {
      auto u = sigma_image(t->child);
      if (u.empty()) {
        return make_element(trivial_graph(), {}, ctx);
      }
      InverseAutomaton e = plus_inv(barred_automaton(u, ctx));
      return make_element(std::move(e), std::move(u), ctx);
    }
  }
  throw std::logic_error("unreachable");
}

bool decide_equal(const FFBRElement& a, const FFBRElement& b,
                  const Alphabet& al) {
  (void) al;
  return a.u == b.u && iso_check(a.e, b.e);
}

bool decide_equal(const TermPtr& t1, const TermPtr& t2,
                  const VarietyContext& ctx) {
  return decide_equal(eval(t1, ctx), eval(t2, ctx), ctx.alphabet);
}

bool leq(const TermPtr& t1, const TermPtr& t2, const VarietyContext& ctx) {
  FFBRElement a = eval(t1, ctx);
  FFBRElement b = eval(t2, ctx);
  return a.u == b.u && rooted_morphism(a.e, b.e).has_value();
}

bool sigma_related(const TermPtr& t1, const TermPtr& t2,
                   const VarietyContext& ctx) {
  (void) ctx;
  return sigma_image(t1) == sigma_image(t2);
}

FFBRElement max_element(const TermPtr& t, const VarietyContext& ctx) {
  auto u = sigma_image(t);
  if (u.empty()) {
    return FFBRElement{trivial_graph(), {}, ctx.variety};
  }
  InverseAutomaton e = plus_inv(barred_automaton(u, ctx));
  return FFBRElement{std::move(e), std::move(u), ctx.variety};
}

namespace {

using Subst = std::map<std::string, TermPtr>;

TermPtr sub(const Subst& s, const std::string& var) {
  auto it = s.find(var);
  if (it == s.end()) {
    throw std::invalid_argument("substitution misses variable \"" + var
                                + "\"");
  }
  return it->second;
}

std::vector<std::pair<TermPtr, TermPtr>> scheme_instances(
    IdentityScheme scheme, const Subst& s) {
  TermPtr x = sub(s, "x");
  TermPtr y = sub(s, "y");
  switch (scheme) {
    case IdentityScheme::A1n:
      return {{t_mul(t_max(x), t_star(x)), x},
              {t_max(t_mul(x, t_star(y))), t_max(x)}};
    case IdentityScheme::M2:
      return {{t_max(t_mul(x, t_star(y))), t_max(x)},
              {t_max(t_mul(x, t_plus(y))), t_max(x)}};
    case IdentityScheme::LeftS:
      return {{t_mul(t_max(x), t_max(y)),
               t_mul(t_plus(t_max(x)), t_max(t_mul(x, y)))}};
    case IdentityScheme::RightS:
      return {{t_mul(t_max(x), t_max(y)),
               t_mul(t_max(t_mul(x, y)), t_star(t_max(y)))}};
    case IdentityScheme::Perf:
      return {{t_mul(t_max(x), t_max(y)), t_max(t_mul(x, y))}};
    case IdentityScheme::BirestrictionAxioms:
      return {
          {t_mul(x, t_star(x)), x},
          {t_mul(t_star(x), t_star(y)), t_mul(t_star(y), t_star(x))},
          {t_star(t_mul(x, t_star(y))), t_mul(t_star(x), t_star(y))},
          {t_mul(t_star(x), y), t_mul(y, t_star(t_mul(x, y)))},
          {t_mul(t_plus(x), x), x},
          {t_mul(t_plus(x), t_plus(y)), t_mul(t_plus(y), t_plus(x))},
          {t_plus(t_mul(t_plus(x), y)), t_mul(t_plus(x), t_plus(y))},
          {t_mul(x, t_plus(y)), t_mul(t_plus(t_mul(x, y)), x)},
          {t_star(t_plus(x)), t_plus(x)},
          {t_plus(t_star(x)), t_star(x)},
      };
  }
  throw std::logic_error("unreachable");
}

}  // namespace

bool check_identity(IdentityScheme scheme, const Subst& substitution,
                    const VarietyContext& ctx) {
  for (const auto& [lhs, rhs] : scheme_instances(scheme, substitution)) {
    if (!decide_equal(lhs, rhs, ctx)) {
      return false;
    }
  }
  return true;
}

std::string to_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out += digits[c >> 4];
    out += digits[c & 0xf];
  }
  return out;
}

std::string element_record(const FFBRElement& a, const Alphabet& al) {
  std::string u;
  for (LetterId x : a.u) {
    u += al.name(x);
  }
  return std::string("{\"variety\":\"") + variety_name(a.variety)
         + "\",\"u\":\"" + u + "\",\"graph\":\""
         + to_hex(canonical_serialize(a.e, al)) + "\"}";
}

}  // namespace birest
