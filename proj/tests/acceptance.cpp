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
// End-to-end acceptance run: figure reproductions and the property
// suites, one pass/fail line per criterion. Exits with the number of
// failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "birest/cayley.hpp"
#include "birest/ffbr.hpp"
#include "birest/generators.hpp"
#include "birest/munn.hpp"
#include "birest/suites.hpp"
#include "test_util.hpp"

using namespace birest;
using namespace birest::test;

namespace {

constexpr uint64_t kSeed = 20260810;
const ClosureBudget kBudget{};

struct Criterion {
  std::string name;
  double time_limit_s;  // 0 = unenforced
  std::function<void(std::ostream&)> run;  // throws on failure
};

void require(bool ok, const std::string& what) {
  if (!ok) {
    throw std::runtime_error(what);
  }
}

void require_suite(const SuiteResult& res) {
  if (!res.ok()) {
    std::ostringstream msg;
    msg << "suite " << res.name << ": " << res.failures << "/" << res.cases
        << " failures";
    if (!res.failure_messages.empty()) {
      msg << " (first: " << res.failure_messages.front() << ")";
    }
    throw std::runtime_error(msg.str());
  }
}

VarietyContext ctx_of(Variety v, const Alphabet& a) {
  return VarietyContext{a, v, kBudget, kSeed};
}

const std::vector<Variety> kAll = {Variety::Free, Variety::LS, Variety::RS,
                                   Variety::S, Variety::P};
const std::vector<Variety> kNonPerfect = {Variety::Free, Variety::LS,
                                          Variety::RS, Variety::S};

void criterion1(std::ostream& log) {
  Alphabet a = ab_xy();
  SignedWord w = sw("[xy] [yy]' [yx] [xx]'", a);
  require(group_value(w).empty(), "group value of the obstruction is not 1");
  InverseAutomaton path = linear_graph(w);
  for (Variety v : kNonPerfect) {
    Closure c = closure_of_word(w, v, kBudget);
    require(canonical_serialize(c.graph, a) == canonical_serialize(path, a),
            "closure changed the 5-vertex path in " + variety_name(v));
    require(accepts(c.graph, w), "graph must accept a");
    require(!accepts(c.graph, wcat(w, w)), "graph must reject a^2");
    require(!is_idempotent(w, v, kBudget),
            "a must not be idempotent in " + variety_name(v));
  }
  log << "5-vertex path fixed in free/ls/rs/s; a accepted, a^2 rejected";
}

void criterion2(std::ostream& log) {
  Alphabet one = ab_x();
  SignedWord w = sw("[x] [xx]' [x]", one);
  Closure free_closure = closure_of_word(w, Variety::Free, kBudget);
  require(free_closure.graph.num_vertices() == 4,
          "free closure is not the 4-vertex path");
  require(!is_idempotent(w, Variety::Free, kBudget),
          "w must not be idempotent in free");
  for (Variety v : {Variety::LS, Variety::RS, Variety::S}) {
    require(is_idempotent(w, v, kBudget),
            "w must be idempotent in " + variety_name(v));
  }
  log << "idempotent differential free vs ls/rs/s reproduced";
}

void criterion3(std::ostream& log) {
  Alphabet a = ab_xy();
  Closure c1 = closure_of_word(sw("x", a), Variety::Free, kBudget);
  InverseAutomaton f1 = graph_of(2, 0, 1, {{0, "x", 1}, {0, "[x]", 1}}, a);
  require(canonical_serialize(c1.graph, a) == canonical_serialize(f1, a),
          "Case 1 figure mismatch");

  Closure c2 = closure_of_word(sw("[x] [y]", a), Variety::Free, kBudget);
  InverseAutomaton f2 = graph_of(
      3, 0, 2, {{0, "[x]", 1}, {1, "[y]", 2}, {0, "[xy]", 2}}, a);
  require(canonical_serialize(c2.graph, a) == canonical_serialize(f2, a),
          "Case 2 figure mismatch");

  Closure c3 = closure_of_word(sw("[x]' [xy]", a), Variety::LS, kBudget);
  InverseAutomaton f3 = graph_of(
      3, 0, 2, {{1, "[x]", 0}, {1, "[xy]", 2}, {0, "[y]", 2}}, a);
  require(canonical_serialize(c3.graph, a) == canonical_serialize(f3, a),
          "left-strong expansion figure mismatch");
  log << "three case figures match byte-exactly";
}

void criterion4(std::ostream& log) {
  Alphabet a = ab_xy();
  size_t total = 0;
  for (Variety v : kAll) {
    SuiteResult res = suite_identities(ctx_of(v, a), 200);
    require_suite(res);
    total += res.cases;
  }
  log << total << " identity cases across five varieties, all pass";
}

void criterion5(std::ostream& log) {
  SuiteResult res = suite_dmap(ctx_of(Variety::Free, ab_xyz()), 100);
  require_suite(res);
  log << res.cases << " D-map cases incl. the worked example, all pass";
}

void criterion6(std::ostream& log) {
  Alphabet a = ab_xy();
  Rng rng(kSeed);
  for (int i = 0; i < 100; ++i) {
    auto u = random_positive_word(rng, a, 5);
    auto v = random_positive_word(rng, a, 5);
    auto uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    require(fbr_equal(t_mul(t_max(t_word(u)), t_max(t_word(v))),
                      t_max(t_word(uv))),
            "Munn-model morphism failed");
    for (Variety var : kAll) {
      require(decide_equal(t_mul(t_word(u), t_word(v)), t_word(uv),
                           ctx_of(var, a)),
              "coordinate-model morphism failed in " + variety_name(var));
    }
  }
  MunnTree prod = fi_mul(munn_of_word(sw("x", a)),
                         munn_of_word(sw("x'", a)));
  require(prod.endpoint.empty() && prod.vertices.size() == 2,
          "tau(x) tau(x^-1) must be (x^+, 1)");
  require(prod != munn_of_word({}), "tau(x) tau(x^-1) must differ from 1");
  log << "u -> (u^+, u) multiplicative in both models; counterexample holds";
}

void criterion7(std::ostream& log) {
  Alphabet a = ab_xy();
  auto ctx = ctx_of(Variety::Free, a);
  Rng rng(kSeed + 7);
  for (int i = 0; i < 50; ++i) {
    SignedWord w;
    size_t blocks = 1 + rng.below(2);
    for (size_t b = 0; b < blocks; ++b) {
      SignedWord z = random_extended_signed_word(rng, a, 3, 2);
      w = wcat(w, wcat(z, involutive_inverse(z)));
    }
    FFBRElement el = eval(d_term(w), ctx);
    require(el.u.empty(), "D_w must be a projection");
    Closure c = closure_of_word(w, Variety::Free, kBudget);
    require(iso_check(el.e, plus_inv(c.graph)),
            "projection correspondence failed on "
                + print_signed_word(w, a));
  }
  log << "50 idempotent-valued words: eval(D_w) matches the closed graph";
}

void criterion8(std::ostream& log) {
  SuiteResult res = suite_perfect_crosscheck(
      ctx_of(Variety::P, ab_xy()), 500);
  require_suite(res);
  log << res.cases << " dual-model pairs, zero discrepancies";
}

void criterion9(std::ostream& log) {
  SuiteResult res = suite_eunitary(ctx_of(Variety::P, ab_xy()), 100);
  require_suite(res);
  log << res.cases << " trivial-value words idempotent (p over two letters, "
      << "ls/rs/s over one)";
}

void criterion10(std::ostream& log) {
  size_t total = 0;
  for (Variety v : kAll) {
    SuiteResult res = suite_confluence(ctx_of(v, ab_xyz()), 20, 10);
    require_suite(res);
    total += res.cases;
  }
  for (Variety v : kNonPerfect) {
    SuiteResult res = suite_oracle(ctx_of(v, ab_xy()), 50);
    require_suite(res);
    total += res.cases;
  }
  log << total << " robustness cases (confluence, idempotence, oracle "
      << "agreement), all pass";
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"obstruction figure (free/ls/rs/s)", 1.0, criterion1},
      {"one-letter differential (free vs ls/rs/s)", 1.0, criterion2},
      {"expansion case figures", 0.0, criterion3},
      {"variety identity suites", 60.0, criterion4},
      {"D-map suite", 30.0, criterion5},
      {"coordinate morphisms", 0.0, criterion6},
      {"projection correspondence", 0.0, criterion7},
      {"perfect dual-model agreement", 120.0, criterion8},
      {"E-unitarity samples", 0.0, criterion9},
      {"engine robustness", 0.0, criterion10},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    std::ostringstream log;
    auto begin = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run(log);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - begin)
            .count();
    if (error.empty() && c.time_limit_s > 0 && elapsed > c.time_limit_s) {
      std::ostringstream msg;
      msg << "time limit exceeded (" << elapsed << "s > " << c.time_limit_s
          << "s)";
      error = msg.str();
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    if (error.empty()) {
      line << "[PASS] criterion " << (i + 1) << " (" << elapsed
           << "s): " << c.name << " - " << log.str();
    } else {
      ++failures;
      line << "[FAIL] criterion " << (i + 1) << " (" << elapsed
           << "s): " << c.name << " - " << error;
    }
    std::cout << line.str() << "\n" << std::flush;
  }
  return failures;
}
