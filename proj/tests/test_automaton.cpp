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

#include <algorithm>

#include "doctest.h"

#include "birest/automaton.hpp"
#include "birest/generators.hpp"
#include "test_util.hpp"

using namespace birest;
using namespace birest::test;

namespace {

// relabels vertices by a permutation; used to test id-independence
InverseAutomaton permuted(const InverseAutomaton& a,
                          const std::vector<uint32_t>& perm) {
  InverseAutomaton out;
  for (size_t i = 1; i < a.num_vertices(); ++i) {
    out.add_vertex();
  }
  for (const auto& e : a.edges()) {
    out.add_edge(perm[e.src], e.lab, perm[e.dst]);
  }
  out.set_start(perm[a.start()]);
  out.set_end(perm[a.end()]);
  return out;
}

}  // namespace

TEST_CASE("linear graph") {
  Alphabet a = ab_xy();
  InverseAutomaton empty = linear_graph({});
  CHECK(empty.num_vertices() == 1);
  CHECK(empty.start() == empty.end());

  InverseAutomaton x = linear_graph(sw("x", a));
  CHECK(x.num_vertices() == 2);
  CHECK(x.start() == 0);
  CHECK(x.end() == 1);
  CHECK(x.edges().size() == 1);

  InverseAutomaton fig = linear_graph(sw("[xy] [yy]' [yx] [xx]'", a));
  CHECK(fig.num_vertices() == 5);
  InverseAutomaton expected = graph_of(5, 0, 4,
                                       {{0, "[xy]", 1},
                                        {2, "[yy]", 1},
                                        {2, "[yx]", 3},
                                        {4, "[xx]", 3}},
                                       a);
  CHECK(fig == expected);
}

TEST_CASE("fold: pinned examples") {
  Alphabet a = ab_xy();
  // x x^{-1} x folds to a single x edge
  InverseAutomaton f = fold(linear_graph(sw("x x' x", a)));
  InverseAutomaton expected = graph_of(2, 0, 1, {{0, "x", 1}}, a);
  CHECK(canonical_serialize(f, a) == canonical_serialize(expected, a));

  // already deterministic input is unchanged
  CHECK(fold(f) == f);

  // x x^{-1} folds to one edge with start = end
  InverseAutomaton g = fold(linear_graph(sw("x x'", a)));
  CHECK(g.num_vertices() == 2);
  CHECK(g.edges().size() == 1);
  CHECK(g.start() == g.end());
}

TEST_CASE("fold: id-independence and acceptance of the source word") {
  Alphabet a = ab_xyz();
  Rng rng(101);
  for (int i = 0; i < 40; ++i) {
    SignedWord w = random_extended_signed_word(rng, a, 10, 3);
    InverseAutomaton lin = linear_graph(w);
    InverseAutomaton base = fold(lin);
    CHECK(base.is_deterministic());
    CHECK(base.is_connected());
    CHECK(accepts(base, w));
    for (int k = 0; k < 10; ++k) {
      std::vector<uint32_t> perm(lin.num_vertices());
      for (uint32_t v = 0; v < perm.size(); ++v) {
        perm[v] = v;
      }
      for (size_t j = perm.size(); j > 1; --j) {
        std::swap(perm[j - 1], perm[rng.below(j)]);
      }
      CHECK(iso_check(fold(permuted(lin, perm)), base));
    }
  }
}

TEST_CASE("glue") {
  Alphabet a = ab_xy();
  InverseAutomaton xy = glue(linear_graph(sw("x", a)),
                             linear_graph(sw("y", a)));
  CHECK(canonical_serialize(xy, a)
        == canonical_serialize(fold(linear_graph(sw("x y", a))), a));

  InverseAutomaton fig = fold(linear_graph(sw("[xy] [yy]' [yx] [xx]'", a)));
  CHECK(iso_check(glue(fig, InverseAutomaton()), fig));

  InverseAutomaton xx = glue(linear_graph(sw("x", a)),
                             linear_graph(sw("x'", a)));
  CHECK(xx.start() == xx.end());
  CHECK(xx.edges().size() == 1);

  // associativity up to isomorphism on sampled triples
  Rng rng(55);
  for (int i = 0; i < 30; ++i) {
    InverseAutomaton p = fold(linear_graph(
        random_extended_signed_word(rng, a, 5, 2)));
    InverseAutomaton q = fold(linear_graph(
        random_extended_signed_word(rng, a, 5, 2)));
    InverseAutomaton r = fold(linear_graph(
        random_extended_signed_word(rng, a, 5, 2)));
    CHECK(iso_check(glue(glue(p, q), r), glue(p, glue(q, r))));
  }
}

TEST_CASE("rooted morphism") {
  Alphabet a = ab_xy();
  InverseAutomaton idem = graph_of(2, 0, 0, {{0, "x", 1}}, a);
  auto self = rooted_morphism(idem, idem);
  REQUIRE(self.has_value());
  CHECK((*self)[0] == 0);
  CHECK((*self)[1] == 1);

  // the one-vertex graph maps into any graph with start = end
  CHECK(rooted_morphism(idem, InverseAutomaton()).has_value());
  CHECK(!rooted_morphism(InverseAutomaton(), idem).has_value());

  // x <= [x]: the closed graph of x absorbs the graph of [x]
  InverseAutomaton x_closed =
      graph_of(2, 0, 1, {{0, "x", 1}, {0, "[x]", 1}}, a);
  InverseAutomaton xbar = graph_of(2, 0, 1, {{0, "[x]", 1}}, a);
  CHECK(rooted_morphism(x_closed, xbar).has_value());
  CHECK(!rooted_morphism(xbar, x_closed).has_value());
}

TEST_CASE("accepts") {
  Alphabet a = ab_xy();
  InverseAutomaton fig = fold(linear_graph(sw("[xy] [yy]' [yx] [xx]'", a)));
  SignedWord w = sw("[xy] [yy]' [yx] [xx]'", a);
  CHECK(accepts(fig, w));
  CHECK(!accepts(fig, wcat(w, w)));
  CHECK_THROWS_AS(accepts(linear_graph(sw("x x' x", a)), w),
                  std::logic_error);

  // negative letters traverse reversed positive edges
  Label xy = Label::barred_word({0, 1});
  CHECK(fig.step(0, xy) == InverseAutomaton::Vertex{1});
  CHECK(fig.costep(1, xy) == InverseAutomaton::Vertex{0});
  CHECK(!fig.costep(0, xy).has_value());

  CHECK(accepts(InverseAutomaton(), {}));
  InverseAutomaton x = fold(linear_graph(sw("x", a)));
  CHECK(!accepts(x, {}));

  Alphabet one = ab_x();
  InverseAutomaton o1 = fold(linear_graph(sw("[x] [xx]' [x]", one)));
  SignedWord v = sw("[x] [xx]' [x]", one);
  CHECK(accepts(o1, v));
  CHECK(!accepts(o1, wcat(v, v)));
}

TEST_CASE("iso check and canonical serialization") {
  Alphabet a = ab_xy();
  InverseAutomaton x = fold(linear_graph(sw("x", a)));
  InverseAutomaton y = fold(linear_graph(sw("y", a)));
  CHECK(iso_check(x, x));
  CHECK(!iso_check(x, y));

  CHECK(canonical_serialize(InverseAutomaton(), a) == "1 0 0\n");

  InverseAutomaton f = fold(linear_graph(sw("x x' x", a)));
  InverseAutomaton scrambled = permuted(f, {1, 0});
  CHECK(canonical_serialize(f, a) == canonical_serialize(scrambled, a));
  CHECK(iso_check(f, scrambled));

  std::string dot = to_dot(graph_of(2, 0, 1, {{0, "x", 1}, {0, "[x]", 1}}, a),
                           a);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("label=\"x\"") != std::string::npos);

  // morphisms both ways exactly when isomorphic
  Rng rng(77);
  for (int i = 0; i < 40; ++i) {
    InverseAutomaton p = fold(linear_graph(
        random_extended_signed_word(rng, a, 6, 2)));
    InverseAutomaton q = rng.flip()
                             ? fold(linear_graph(
                                   random_extended_signed_word(rng, a, 6, 2)))
                             : p;
    bool both = rooted_morphism(p, q).has_value()
                && rooted_morphism(q, p).has_value();
    CHECK(both == iso_check(p, q));
  }
}
