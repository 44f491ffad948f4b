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

#include "doctest.h"

#include "birest/ffbr.hpp"
#include "birest/generators.hpp"
#include "birest/munn.hpp"
#include "test_util.hpp"

using namespace birest;
using namespace birest::test;

namespace {

VarietyContext ctx_of(Variety v, const Alphabet& a, uint64_t seed = 0) {
  return VarietyContext{a, v, ClosureBudget{}, seed};
}

}  // namespace

TEST_CASE("eval: pinned coordinates") {
  Alphabet a = ab_xy();
  auto free_ctx = ctx_of(Variety::Free, a);

  FFBRElement x = eval(parse_term("x", a), free_ctx);
  CHECK(x.u == std::vector<LetterId>{0});
  InverseAutomaton expected =
      graph_of(2, 0, 0, {{0, "x", 1}, {0, "[x]", 1}}, a);
  CHECK(iso_check(x.e, expected));

  FFBRElement mxy = eval(parse_term("M(x y)", a), free_ctx);
  CHECK(mxy.u == std::vector<LetterId>{0, 1});
  InverseAutomaton expected_m = graph_of(2, 0, 0, {{0, "[xy]", 1}}, a);
  CHECK(iso_check(mxy.e, expected_m));

  FFBRElement one = eval(parse_term("1", a), free_ctx);
  CHECK(one.u.empty());
  CHECK(one.e.num_vertices() == 1);
}

TEST_CASE("decide_equal: the perfect identity separates varieties") {
  Alphabet a = ab_xy();
  TermPtr lhs = parse_term("M(x) M(y)", a);
  TermPtr rhs = parse_term("M(x y)", a);
  CHECK(decide_equal(lhs, rhs, ctx_of(Variety::P, a)));
  CHECK(!decide_equal(lhs, rhs, ctx_of(Variety::Free, a)));
  CHECK(!decide_equal(lhs, rhs, ctx_of(Variety::LS, a)));
}

TEST_CASE("decide_equal: the left-strong relation separates varieties") {
  Alphabet a = ab_xy();
  // M(x) M(y) = (M(x))^+ M(x y) in LS, not in Free
  TermPtr lhs = parse_term("M(x) M(y)", a);
  TermPtr rhs = parse_term("M(x)^+ M(x y)", a);
  CHECK(decide_equal(lhs, rhs, ctx_of(Variety::LS, a)));
  CHECK(!decide_equal(lhs, rhs, ctx_of(Variety::Free, a)));
}

TEST_CASE("decide_equal: basics") {
  Alphabet a = ab_xy();
  Rng rng(71);
  TermGenOptions opts;
  for (int i = 0; i < 30; ++i) {
    TermPtr t = random_term(rng, a, opts);
    for (Variety v : {Variety::Free, Variety::LS, Variety::RS, Variety::S,
                      Variety::P}) {
      CHECK(decide_equal(t, t, ctx_of(v, a)));
    }
  }
  CHECK(decide_equal(parse_term("M(x) x^*", a), parse_term("x", a),
                     ctx_of(Variety::Free, a)));
}

TEST_CASE("order, sigma and maxima") {
  Alphabet a = ab_xy();
  auto ctx = ctx_of(Variety::Free, a);
  TermPtr x = parse_term("x", a);
  CHECK(leq(x, parse_term("M(x)", a), ctx));
  CHECK(sigma_related(parse_term("x^*", a), parse_term("y^+", a), ctx));
  CHECK(!sigma_related(parse_term("x", a), parse_term("y", a), ctx));

  // leq(max_element(t), eval(t)) only when eval(t) is already maximal
  FFBRElement mx = max_element(x, ctx);
  CHECK(decide_equal(mx, eval(parse_term("M(x)", a), ctx), a));
  CHECK(!leq(parse_term("M(x)", a), x, ctx));
  CHECK(leq(parse_term("M(x)", a), parse_term("M(x)", a), ctx));

  Rng rng(73);
  TermGenOptions opts;
  for (int i = 0; i < 50; ++i) {
    TermPtr t = random_term(rng, a, opts);
    for (Variety v : {Variety::Free, Variety::LS, Variety::S, Variety::P}) {
      auto vctx = ctx_of(v, a);
      FFBRElement el = eval(t, vctx);
      FFBRElement mel = max_element(t, vctx);
      CHECK(el.u == mel.u);
      CHECK(rooted_morphism(el.e, mel.e).has_value());  // el <= max
    }
  }
}

TEST_CASE("check_identity") {
  Alphabet a = ab_xy();
  Rng rng(79);
  TermGenOptions opts;
  opts.max_size = 4;
  for (int i = 0; i < 40; ++i) {
    std::map<std::string, TermPtr> s;
    s["x"] = random_term(rng, a, opts);
    s["y"] = random_term(rng, a, opts);
    for (Variety v : {Variety::Free, Variety::LS, Variety::RS, Variety::S,
                      Variety::P}) {
      CHECK(check_identity(IdentityScheme::A1n, s, ctx_of(v, a)));
      CHECK(check_identity(IdentityScheme::M2, s, ctx_of(v, a)));
      CHECK(check_identity(IdentityScheme::BirestrictionAxioms, s,
                           ctx_of(v, a)));
    }
    CHECK(check_identity(IdentityScheme::LeftS, s, ctx_of(Variety::LS, a)));
    CHECK(check_identity(IdentityScheme::LeftS, s, ctx_of(Variety::S, a)));
    CHECK(check_identity(IdentityScheme::RightS, s, ctx_of(Variety::RS, a)));
    CHECK(check_identity(IdentityScheme::RightS, s, ctx_of(Variety::S, a)));
    CHECK(check_identity(IdentityScheme::Perf, s, ctx_of(Variety::P, a)));
  }
  std::map<std::string, TermPtr> gens{{"x", parse_term("x", a)},
                                      {"y", parse_term("y", a)}};
  CHECK(!check_identity(IdentityScheme::LeftS, gens, ctx_of(Variety::Free, a)));
  CHECK(!check_identity(IdentityScheme::RightS, gens,
                        ctx_of(Variety::Free, a)));
  CHECK(!check_identity(IdentityScheme::Perf, gens, ctx_of(Variety::Free, a)));
}

TEST_CASE("positive words embed multiplicatively") {
  Alphabet a = ab_xy();
  Rng rng(83);
  for (int i = 0; i < 100; ++i) {
    auto u = random_positive_word(rng, a, 4);
    auto v = random_positive_word(rng, a, 4);
    auto uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    for (Variety var : {Variety::Free, Variety::LS, Variety::RS, Variety::S,
                        Variety::P}) {
      CHECK(decide_equal(t_mul(t_word(u), t_word(v)), t_word(uv),
                         ctx_of(var, a)));
    }
  }
}

TEST_CASE("term oracle") {
  Alphabet a = ab_xy();
  auto ctx = ctx_of(Variety::Free, a);
  TermPtr x = parse_term("x", a);
  CHECK(oracle_equal(x, x, ctx, 1) == OracleVerdict::Equal);
  CHECK(oracle_equal(parse_term("x^+ x", a), x, ctx, 1)
        == OracleVerdict::Equal);
  CHECK(oracle_equal(parse_term("M(x) M(y)", a), parse_term("M(x y)", a),
                     ctx, 6)
        == OracleVerdict::Unknown);
  CHECK(oracle_equal(parse_term("M(x) M(y)", a), parse_term("M(x y)", a),
                     ctx_of(Variety::P, a), 2)
        == OracleVerdict::Equal);
  CHECK_THROWS_AS(oracle_equal(x, x, ctx, 0), std::invalid_argument);

  // oracle soundness: certified pairs are engine-equal
  Rng rng(89);
  TermGenOptions opts;
  opts.max_size = 6;
  for (int i = 0; i < 60; ++i) {
    TermPtr t1 = random_term(rng, a, opts);
    for (Variety v : {Variety::Free, Variety::LS, Variety::P}) {
      TermPtr t2 = mutate_equal(rng, t1, v, 1 + static_cast<int>(rng.below(2)));
      auto vctx = ctx_of(v, a);
      CHECK(decide_equal(t1, t2, vctx));
      if (oracle_equal(t1, t2, vctx, 6) == OracleVerdict::Equal) {
        CHECK(decide_equal(t1, t2, vctx));
      }
    }
  }
}

TEST_CASE("projection correspondence") {
  Alphabet a = ab_xy();
  auto ctx = ctx_of(Variety::Free, a);
  Rng rng(97);
  for (int i = 0; i < 50; ++i) {
    // idempotent-valued words: products of blocks z z^{-1}
    SignedWord w;
    size_t blocks = 1 + rng.below(2);
    for (size_t b = 0; b < blocks; ++b) {
      SignedWord z = random_extended_signed_word(rng, a, 3, 2);
      w = wcat(w, wcat(z, involutive_inverse(z)));
    }
    FFBRElement el = eval(d_term(w), ctx);
    CHECK(el.u.empty());
    Closure c = closure_of_word(w, Variety::Free, ctx.budget);
    InverseAutomaton rerooted = plus_inv(c.graph);
    CHECK(c.graph.start() == c.graph.end());
    CHECK(iso_check(el.e, rerooted));
  }
}

TEST_CASE("free-to-quotient soundness on M-free terms") {
  Alphabet a = ab_xy();
  auto ctx = ctx_of(Variety::Free, a);
  Rng rng(103);
  TermGenOptions opts;
  opts.max_size = 6;
  opts.allow_max = false;
  size_t equal_pairs = 0;
  for (int i = 0; i < 80; ++i) {
    TermPtr t1 = random_term(rng, a, opts);
    TermPtr t2 = i % 2 == 0 ? t_mul(t_plus(t1), t1)
                            : random_term(rng, a, opts);
    if (fbr_equal(t1, t2)) {
      ++equal_pairs;
      CHECK(decide_equal(t1, t2, ctx));
    }
  }
  CHECK(equal_pairs > 0);
}

TEST_CASE("properness of the coordinate model") {
  Alphabet a = ab_xy();
  Rng rng(107);
  TermGenOptions opts;
  opts.max_size = 5;
  for (Variety v : {Variety::Free, Variety::S, Variety::P}) {
    auto ctx = ctx_of(v, a);
    size_t hits = 0;
    for (int i = 0; i < 120; ++i) {
      TermPtr s = random_term(rng, a, opts);
      TermPtr t = i % 3 == 0 ? t_mul(t_plus(s), s) : random_term(rng, a, opts);
      if (sigma_related(s, t, ctx)
          && decide_equal(t_star(s), t_star(t), ctx)) {
        ++hits;
        CHECK(decide_equal(s, t, ctx));
      }
    }
    CHECK(hits > 0);
  }
}

TEST_CASE("the u-coordinate is the sigma image") {
  Alphabet a = ab_xy();
  Rng rng(109);
  TermGenOptions opts;
  opts.max_size = 8;
  opts.allow_barred_gen = true;
  for (int i = 0; i < 60; ++i) {
    TermPtr t = random_term(rng, a, opts);
    for (Variety v : {Variety::Free, Variety::S, Variety::P}) {
      CHECK(eval(t, ctx_of(v, a)).u == sigma_image(t));
    }
  }
}

TEST_CASE("the natural order is antisymmetric") {
  Alphabet a = ab_xy();
  Rng rng(113);
  TermGenOptions opts;
  opts.max_size = 5;
  for (int i = 0; i < 60; ++i) {
    TermPtr s = random_term(rng, a, opts);
    TermPtr t = i % 2 == 0 ? mutate_equal(rng, s, Variety::Free, 1)
                           : t_mul(s, t_star(random_term(rng, a, opts)));
    auto ctx = ctx_of(Variety::Free, a);
    bool below = leq(s, t, ctx);
    bool above = leq(t, s, ctx);
    CHECK((below && above) == decide_equal(s, t, ctx));
  }
}

TEST_CASE("element record is schema-stable") {
  Alphabet a = ab_xy();
  auto el = eval(parse_term("M(x y)", a), ctx_of(Variety::Free, a));
  std::string rec = element_record(el, a);
  CHECK(rec.find("\"variety\":\"free\"") != std::string::npos);
  CHECK(rec.find("\"u\":\"xy\"") != std::string::npos);
  CHECK(rec.find("\"graph\":\"") != std::string::npos);
}
