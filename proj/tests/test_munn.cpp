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

#include <functional>

#include "doctest.h"

#include "birest/generators.hpp"
#include "birest/munn.hpp"
#include "test_util.hpp"

using namespace birest;
using namespace birest::test;

namespace {

GroupWord gw(const std::string& text, const Alphabet& a) {
  return group_value(parse_signed_word(text, a));
}

}  // namespace

TEST_CASE("munn_of_word") {
  Alphabet a = ab_xy();
  MunnTree empty = munn_of_word({});
  CHECK(empty.vertices == std::set<GroupWord>{GroupWord{}});
  CHECK(empty.endpoint.empty());

  MunnTree t = munn_of_word(sw("x x'", a));
  CHECK(t.vertices == std::set<GroupWord>{GroupWord{}, gw("x", a)});
  CHECK(t.endpoint.empty());

  MunnTree s = munn_of_word(sw("x y", a));
  CHECK(s.vertices
        == std::set<GroupWord>{GroupWord{}, gw("x", a), gw("x y", a)});
  CHECK(s.endpoint == gw("x y", a));

  CHECK_THROWS_AS(munn_of_word(sw("[x]", a)), std::invalid_argument);
}

TEST_CASE("free inverse monoid arithmetic") {
  Alphabet a = ab_xy();
  MunnTree x = munn_of_word(sw("x", a));
  MunnTree xinv = munn_of_word(sw("x'", a));

  // tau(x) tau(x^{-1}) = (x^+, 1) != (1, 1)
  MunnTree prod = fi_mul(x, xinv);
  CHECK(prod.endpoint.empty());
  CHECK(prod.vertices == std::set<GroupWord>{GroupWord{}, gw("x", a)});
  CHECK(prod != munn_of_word({}));

  CHECK(fi_mul(x, munn_of_word(sw("y", a))) == munn_of_word(sw("x y", a)));
  CHECK(fi_plus(x).vertices == x.vertices);
  CHECK(fi_plus(x).endpoint.empty());

  Rng rng(3);
  for (int i = 0; i < 60; ++i) {
    MunnTree p = munn_of_word(random_plain_signed_word(rng, a, 5));
    MunnTree q = munn_of_word(random_plain_signed_word(rng, a, 5));
    MunnTree r = munn_of_word(random_plain_signed_word(rng, a, 5));
    CHECK(fi_mul(fi_mul(p, q), r) == fi_mul(p, fi_mul(q, r)));
    CHECK(fi_inv(fi_inv(p)) == p);
    // s s^{-1} s = s and the star/plus identities
    CHECK(fi_mul(fi_mul(p, fi_inv(p)), p) == p);
    CHECK(fi_mul(p, fi_star(p)) == p);
    CHECK(fi_mul(fi_plus(p), p) == p);
    CHECK(fi_star(p) == fi_mul(fi_inv(p), p));
    CHECK(fi_plus(p) == fi_mul(p, fi_inv(p)));
  }
}

TEST_CASE("fbr_eval: pinned examples") {
  Alphabet a = ab_xy();
  FBRElement x = fbr_eval(t_gen(LetterId{0}));
  CHECK(x.tree == std::set<GroupWord>{GroupWord{}, gw("x", a)});
  CHECK(x.u == std::vector<LetterId>{0});

  // M(x) x^* = x
  CHECK(fbr_equal(parse_term("M(x) x^*", a), parse_term("x", a)));

  // (u^+, u)(v^+, v) = ((uv)^+, uv)
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    auto u = random_positive_word(rng, a, 5);
    auto v = random_positive_word(rng, a, 5);
    auto uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(fbr_equal(t_mul(t_max(t_word(u)), t_max(t_word(v))),
                    t_max(t_word(uv))));
  }
}

TEST_CASE("fbr_equal distinguishes star and plus") {
  Alphabet a = ab_xy();
  CHECK(fbr_equal(parse_term("x^+ x", a), parse_term("x", a)));
  CHECK(!fbr_equal(parse_term("x^*", a), parse_term("x^+", a)));
}

TEST_CASE("d_term structure") {
  Alphabet a = ab_xy();
  CHECK(d_term({})->kind == BiTerm::Kind::One);
  TermPtr dx = d_term(sw("x", a));
  REQUIRE(dx->kind == BiTerm::Kind::Star);
  CHECK(dx->child->kind == BiTerm::Kind::Gen);

  // outputs contain no M() nodes, also over the extended alphabet
  std::function<bool(const TermPtr&)> max_free = [&](const TermPtr& t) {
    switch (t->kind) {
      case BiTerm::Kind::Max:
        return false;
      case BiTerm::Kind::Mul:
        return max_free(t->child) && max_free(t->right);
      case BiTerm::Kind::Star:
      case BiTerm::Kind::Plus:
        return max_free(t->child);
      default:
        return true;
    }
  };
  Rng rng(19);
  for (int i = 0; i < 50; ++i) {
    CHECK(max_free(d_term(random_extended_signed_word(rng, a, 6, 2))));
  }
}

TEST_CASE("the worked projection example") {
  Alphabet a6 = Alphabet::parse("a,b,c,d,e,f");
  SignedWord w = parse_signed_word("a c' b' d e f", a6);
  CHECK(fbr_equal(d_term(w), parse_term("((b c a^*)^+ d e f)^*", a6)));
}

TEST_CASE("D-map laws") {
  Alphabet a = ab_xyz();
  Rng rng(37);
  for (int i = 0; i < 120; ++i) {
    SignedWord v = random_plain_signed_word(rng, a, 6);
    SignedWord vinv = involutive_inverse(v);
    CHECK(fbr_equal(d_term(vinv), d_term(wcat(v, vinv))));
    CHECK(fbr_equal(d_term(v), d_term(wcat(vinv, v))));
    SignedWord z = random_plain_signed_word(rng, a, 3);
    SignedWord e = wcat(z, involutive_inverse(z));
    CHECK(fbr_equal(t_mul(d_term(v), d_term(e)), d_term(wcat(v, e))));
    SignedWord u = random_plain_signed_word(rng, a, 4);
    CHECK(fbr_equal(d_term(wcat(u, wcat(v, vinv))),
                    t_mul(d_term(u), d_term(vinv))));
  }
}

TEST_CASE("psi_fi inverts D") {
  Alphabet a = ab_xy();
  // psi(D_w) = w^* = w^{-1} w as an idempotent of the free inverse monoid
  Rng rng(41);
  for (int i = 0; i < 80; ++i) {
    SignedWord w = random_plain_signed_word(rng, a, 6);
    MunnTree lhs = psi_fi(d_term(w));
    MunnTree rhs = munn_of_word(wcat(involutive_inverse(w), w));
    CHECK(lhs.vertices == rhs.vertices);
    CHECK(lhs.endpoint.empty());
    CHECK(rhs.endpoint.empty());
  }
  // psi(D_e) = e: on idempotent-valued words the two spellings agree
  for (int i = 0; i < 40; ++i) {
    SignedWord z = random_plain_signed_word(rng, a, 4);
    SignedWord e = wcat(z, involutive_inverse(z));
    MunnTree lhs = psi_fi(d_term(e));
    CHECK(lhs.vertices == munn_of_word(e).vertices);
    CHECK(lhs.vertices
          == munn_of_word(wcat(involutive_inverse(e), e)).vertices);
    CHECK(lhs.endpoint.empty());
  }
  CHECK_THROWS_AS(psi_fi(parse_term("M(x)", a)), std::invalid_argument);
  CHECK_THROWS_AS(psi_fi(parse_term("[xy]", a)), std::invalid_argument);
}

TEST_CASE("birestriction axioms hold in the Munn model") {
  Alphabet a = ab_xy();
  Rng rng(53);
  TermGenOptions opts;
  opts.max_size = 5;
  for (int i = 0; i < 200; ++i) {
    TermPtr x = random_term(rng, a, opts);
    TermPtr y = random_term(rng, a, opts);
    CHECK(fbr_equal(t_mul(x, t_star(x)), x));
    CHECK(fbr_equal(t_mul(t_star(x), t_star(y)),
                    t_mul(t_star(y), t_star(x))));
    CHECK(fbr_equal(t_star(t_mul(x, t_star(y))),
                    t_mul(t_star(x), t_star(y))));
    CHECK(fbr_equal(t_mul(t_star(x), y), t_mul(y, t_star(t_mul(x, y)))));
    CHECK(fbr_equal(t_mul(t_plus(x), x), x));
    CHECK(fbr_equal(t_mul(t_plus(x), t_plus(y)),
                    t_mul(t_plus(y), t_plus(x))));
    CHECK(fbr_equal(t_plus(t_mul(t_plus(x), y)),
                    t_mul(t_plus(x), t_plus(y))));
    CHECK(fbr_equal(t_mul(x, t_plus(y)), t_mul(t_plus(t_mul(x, y)), x)));
    CHECK(fbr_equal(t_star(t_plus(x)), t_plus(x)));
    CHECK(fbr_equal(t_plus(t_star(x)), t_star(x)));
    // the F-identities and derived laws
    CHECK(fbr_equal(t_mul(t_max(x), t_star(x)), x));
    CHECK(fbr_equal(t_max(t_mul(x, t_star(y))), t_max(x)));
    CHECK(fbr_equal(t_star(t_mul(x, y)), t_star(t_mul(t_star(x), y))));
    CHECK(fbr_equal(t_plus(t_mul(x, y)), t_plus(t_mul(x, t_plus(y)))));
    CHECK(fbr_equal(t_mul(t_star(x), y),
                    t_mul(y, t_star(t_mul(t_star(x), y)))));
    CHECK(fbr_equal(t_star(t_mul(x, t_star(y))), t_mul(t_star(x), t_star(y))));
  }
}

TEST_CASE("the Munn model is proper") {
  Alphabet a = ab_xy();
  Rng rng(61);
  TermGenOptions opts;
  opts.max_size = 5;
  size_t hits = 0;
  for (int i = 0; i < 300; ++i) {
    TermPtr s = random_term(rng, a, opts);
    // every third pair is sigma-related by construction
    TermPtr t = i % 3 == 0 ? t_mul(t_plus(s), s) : random_term(rng, a, opts);
    if (sigma_image(s) == sigma_image(t)
        && fbr_equal(t_star(s), t_star(t))) {
      ++hits;
      CHECK(fbr_equal(s, t));
    }
  }
  CHECK(hits > 0);
}

TEST_CASE("serialization of Munn trees") {
  Alphabet a = ab_xy();
  MunnTree t = munn_of_word(sw("x y'", a));
  CHECK(munn_serialize(t, a) == "{1,x,xy'} @ xy'");
  std::string dot = munn_to_dot(t, a);
  CHECK(dot.find("doublecircle") != std::string::npos);
}
