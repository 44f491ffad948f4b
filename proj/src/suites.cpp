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

#include "birest/suites.hpp"

#include <map>
#include <stdexcept>

#include "birest/cayley.hpp"
#include "birest/generators.hpp"
#include "birest/munn.hpp"
#include "birest/word_oracle.hpp"

namespace birest {

namespace {

uint64_t mix(uint64_t seed, uint64_t i) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Runs bodies in parallel; a body reports a failure by filling its slot.
// Output order is by case index, not completion order.
template <typename Body>
SuiteResult run_cases(const std::string& name, size_t n, const Body& body) {
  std::vector<std::string> errors(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    auto idx = static_cast<size_t>(i);
    try {
      body(idx, errors[idx]);
    } catch (const std::exception& e) {
      errors[idx] = std::string("exception: ") + e.what();
    }
  }
  SuiteResult out;
  out.name = name;
  out.cases = n;
  for (size_t i = 0; i < n; ++i) {
    if (!errors[i].empty()) {
      ++out.failures;
      out.failure_messages.push_back("case " + std::to_string(i) + ": "
                                     + errors[i]);
    }
  }
  return out;
}

TermPtr small_term(Rng& rng, const Alphabet& a) {
  TermGenOptions opts;
  opts.max_size = 4;
  opts.allow_max = true;
  return random_term(rng, a, opts);
}

}  // namespace

SuiteResult suite_identities(const VarietyContext& ctx, size_t cases) {
  Variety v = ctx.variety;
  std::vector<uint8_t> left_holds(cases, 1), right_holds(cases, 1),
      perf_holds(cases, 1);
  SuiteResult res = run_cases(
      "identities", cases, [&](size_t i, std::string& err) {
        Rng rng(mix(ctx.seed, i));
        std::map<std::string, TermPtr> s;
        if (i == 0) {
          // pinned substitution: the generic generators
          s["x"] = t_gen(static_cast<LetterId>(0));
          s["y"] = t_gen(
              static_cast<LetterId>(ctx.alphabet.size() > 1 ? 1 : 0));
        } else {
          s["x"] = small_term(rng, ctx.alphabet);
          s["y"] = small_term(rng, ctx.alphabet);
        }
        if (!check_identity(IdentityScheme::BirestrictionAxioms, s, ctx)) {
          err = "a birestriction axiom failed";
          return;
        }
        if (!check_identity(IdentityScheme::A1n, s, ctx)) {
          err = "an F-identity failed";
          return;
        }
        if (!check_identity(IdentityScheme::M2, s, ctx)) {
          err = "M2 failed";
          return;
        }
        bool l = check_identity(IdentityScheme::LeftS, s, ctx);
        bool r = check_identity(IdentityScheme::RightS, s, ctx);
        bool p = check_identity(IdentityScheme::Perf, s, ctx);
        left_holds[i] = l;
        right_holds[i] = r;
        perf_holds[i] = p;
        if ((v == Variety::LS || v == Variety::S) && !l) {
          err = "left-strong identity failed in its variety";
          return;
        }
        if ((v == Variety::RS || v == Variety::S) && !r) {
          err = "right-strong identity failed in its variety";
          return;
        }
        if (v == Variety::P && !p) {
          err = "perfect identity failed in its variety";
          return;
        }
      });
  if (v == Variety::Free) {
    auto all = [](const std::vector<uint8_t>& hs) {
      for (uint8_t h : hs) {
        if (!h) {
          return false;
        }
      }
      return true;
    };
    ++res.cases;
    if (all(left_holds) || all(right_holds) || all(perf_holds)) {
      ++res.failures;
      res.failure_messages.push_back(
          "expected counterexamples to the strong/perfect identities in the "
          "free variety");
    }
  }
  return res;
}

SuiteResult suite_dmap(const VarietyContext& ctx, size_t cases) {
  SuiteResult res = run_cases("dmap", cases, [&](size_t i, std::string& err) {
    Rng rng(mix(ctx.seed, i));
    SignedWord w = random_plain_signed_word(rng, ctx.alphabet, 6);
    SignedWord winv = involutive_inverse(w);
    auto concat = [](const SignedWord& a, const SignedWord& b) {
      SignedWord out = a;
      out.insert(out.end(), b.begin(), b.end());
      return out;
    };
    if (!fbr_equal(d_term(winv), d_term(concat(w, winv)))) {
      err = "D_{v^-1} != D_{vv^-1}";
      return;
    }
    if (!fbr_equal(d_term(w), d_term(concat(winv, w)))) {
      err = "D_v != D_{v^-1 v}";
      return;
    }
    SignedWord z = random_plain_signed_word(rng, ctx.alphabet, 3);
    SignedWord e = concat(z, involutive_inverse(z));  // idempotent value
    if (!fbr_equal(t_mul(d_term(w), d_term(e)), d_term(concat(w, e)))) {
      err = "D_v D_e != D_{ve}";
      return;
    }
    SignedWord u2 = random_plain_signed_word(rng, ctx.alphabet, 4);
    SignedWord v2 = random_plain_signed_word(rng, ctx.alphabet, 4);
    if (!fbr_equal(d_term(concat(u2, concat(v2, involutive_inverse(v2)))),
                   t_mul(d_term(u2), d_term(involutive_inverse(v2))))) {
      err = "D_{uvv^-1} != D_u D_{v^-1}";
      return;
    }
    // equal projections stay equal under right multiplication
    SignedWord wexp = concat(w, concat(winv, w));
    SignedWord r = random_plain_signed_word(rng, ctx.alphabet, 3);
    if (!fbr_equal(d_term(w), d_term(wexp))
        || !fbr_equal(d_term(concat(w, r)), d_term(concat(wexp, r)))) {
      err = "D_u = D_v but D_{uw} != D_{vw}";
      return;
    }
  });
  // the worked six-letter example
  ++res.cases;
  try {
    Alphabet a6 = Alphabet::parse("a,b,c,d,e,f");
    SignedWord w = parse_signed_word("a c' b' d e f", a6);
    TermPtr expected = parse_term("((b c a^*)^+ d e f)^*", a6);
    if (!fbr_equal(d_term(w), expected)) {
      ++res.failures;
      res.failure_messages.push_back("worked D example mismatch");
    }
  } catch (const std::exception& ex) {
    ++res.failures;
    res.failure_messages.push_back(std::string("worked D example: ")
                                   + ex.what());
  }
  return res;
}

SuiteResult suite_oracle(const VarietyContext& ctx, size_t cases) {
  Variety v = ctx.variety;
  // the one-letter universe: all signed words of length <= 3 over
  // {x, [x], [xx]}
  Alphabet xa({"x"});
  std::vector<SignedLetter> letters;
  for (Label base : {Label::plain(0), Label::barred_word({0}),
                     Label::barred_word({0, 0})}) {
    letters.push_back(SignedLetter{base, false});
    letters.push_back(SignedLetter{base, true});
  }
  std::vector<SignedWord> universe;
  universe.push_back({});
  size_t begin = 0;
  for (int len = 1; len <= 3; ++len) {
    size_t end = universe.size();
    for (size_t i = begin; i < end; ++i) {
      for (const auto& l : letters) {
        SignedWord w = universe[i];
        w.push_back(l);
        universe.push_back(std::move(w));
      }
    }
    begin = end;
  }

  std::vector<std::set<std::string>> balls(universe.size());
  std::vector<Closure> closures(universe.size());
  std::vector<SignedWord> prepared(universe.size());
  std::vector<std::string> prep_errors(universe.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(universe.size()); ++i) {
    auto idx = static_cast<size_t>(i);
    try {
      balls[idx] = derivation_ball(universe[idx], v, xa, 3, 1200, 15, 3);
      prepared[idx] =
          v == Variety::P ? expand_barred(universe[idx]) : universe[idx];
      closures[idx] = closure_of_word(universe[idx], v, ctx.budget);
    } catch (const std::exception& e) {
      prep_errors[idx] = e.what();
    }
  }

  SuiteResult res;
  res.name = "oracle";
  for (size_t i = 0; i < universe.size(); ++i) {
    ++res.cases;
    if (!prep_errors[i].empty()) {
      ++res.failures;
      res.failure_messages.push_back("universe word " + std::to_string(i)
                                     + ": " + prep_errors[i]);
    }
  }
  std::map<std::string, std::vector<size_t>> by_key;
  for (size_t i = 0; i < balls.size(); ++i) {
    for (const auto& k : balls[i]) {
      by_key[k].push_back(i);
    }
  }
  std::set<std::pair<size_t, size_t>> certified;
  for (const auto& [k, idxs] : by_key) {
    for (size_t i = 0; i < idxs.size(); ++i) {
      for (size_t j = i + 1; j < idxs.size(); ++j) {
        certified.insert({idxs[i], idxs[j]});
      }
    }
  }
  res.cases += certified.size();
  for (const auto& [i, j] : certified) {
    bool equal = accepts(closures[i].graph, prepared[j])
                 && accepts(closures[j].graph, prepared[i]);
    if (!equal) {
      ++res.failures;
      res.failure_messages.push_back(
          "oracle certified a pair the engine calls unequal: "
          + print_signed_word(universe[i], xa) + " vs "
          + print_signed_word(universe[j], xa));
    }
  }

  // term-level soundness on equal-by-construction pairs
  SuiteResult terms = run_cases(
      "oracle-terms", cases, [&](size_t i, std::string& err) {
        Rng rng(mix(ctx.seed, 0x7e7e + i));
        TermGenOptions opts;
        opts.max_size = 6;
        TermPtr t1 = random_term(rng, ctx.alphabet, opts);
        TermPtr t2 = mutate_equal(rng, t1, v, 1 + static_cast<int>(rng.below(2)));
        if (!decide_equal(t1, t2, ctx)) {
          err = "engine rejects an equal-by-construction pair: "
                + print_term(t1, ctx.alphabet) + " vs "
                + print_term(t2, ctx.alphabet);
          return;
        }
        if (oracle_equal(t1, t2, ctx, 6) == OracleVerdict::Equal
            && !decide_equal(t1, t2, ctx)) {
          err = "oracle Equal but engine unequal";
          return;
        }
      });
  res.cases += terms.cases;
  res.failures += terms.failures;
  for (auto& m : terms.failure_messages) {
    res.failure_messages.push_back(std::move(m));
  }
  return res;
}

SuiteResult suite_confluence(const VarietyContext& ctx, size_t inputs,
                             size_t shuffles) {
  return run_cases(
      "confluence", inputs, [&](size_t i, std::string& err) {
        Rng rng(mix(ctx.seed, 0xc0f + i));
        SignedWord w = random_extended_signed_word(rng, ctx.alphabet, 10, 2);
        Closure base = closure_of_word(w, ctx.variety, ctx.budget);
        Closure again = close(base.graph, ctx.variety, ctx.budget);
        if (!iso_check(base.graph, again.graph)
            || !again.trace.events.empty()) {
          err = "closure is not idempotent on "
                + print_signed_word(w, ctx.alphabet);
          return;
        }
        for (size_t s = 0; s < shuffles; ++s) {
          WorklistPolicy policy{mix(ctx.seed, 1000 * i + s)};
          Closure shuffled = closure_of_word(w, ctx.variety, ctx.budget,
                                             policy);
          if (!iso_check(base.graph, shuffled.graph)) {
            err = "shuffled closure differs on "
                  + print_signed_word(w, ctx.alphabet);
            return;
          }
        }
        if (ctx.variety != Variety::P) {
          size_t folded = fold(linear_graph(w)).num_vertices();
          if (base.graph.num_vertices() > folded) {
            err = "vertex bound violated on "
                  + print_signed_word(w, ctx.alphabet);
            return;
          }
        }
      });
}

SuiteResult suite_eunitary(const VarietyContext& ctx, size_t cases) {
  Alphabet two = Alphabet::parse("x,y");
  Alphabet one({"x"});
  std::vector<Label> pool_p = {Label::plain(0), Label::plain(1),
                               Label::barred_word({0}),
                               Label::barred_word({1})};
  std::vector<Label> pool_one = {Label::plain(0), Label::barred_word({0}),
                                 Label::barred_word({0, 0})};
  struct Part {
    Variety variety;
    const std::vector<Label>* pool;
    const Alphabet* alphabet;
  };
  std::vector<Part> parts = {{Variety::P, &pool_p, &two},
                             {Variety::LS, &pool_one, &one},
                             {Variety::RS, &pool_one, &one},
                             {Variety::S, &pool_one, &one}};
  return run_cases(
      "eunitary", cases * parts.size(), [&](size_t i, std::string& err) {
        const Part& part = parts[i % parts.size()];
        Rng rng(mix(ctx.seed, 0xe0 + i));
        SignedWord w = random_trivial_value_word(rng, *part.pool, 2, 2);
        if (!group_value(w).empty()) {
          err = "generator produced a word with nontrivial value";
          return;
        }
        if (!is_idempotent(w, part.variety, ctx.budget)) {
          err = "trivial-value word is not idempotent in "
                + variety_name(part.variety) + ": "
                + print_signed_word(w, *part.alphabet);
          return;
        }
      });
}

SuiteResult suite_perfect_crosscheck(const VarietyContext& ctx, size_t pairs) {
  VarietyContext pctx = ctx;
  pctx.variety = Variety::P;
  return run_cases(
      "perfect-crosscheck", pairs, [&](size_t i, std::string& err) {
        Rng rng(mix(pctx.seed, 0xcc + i));
        TermGenOptions opts;
        opts.max_size = 12;
        opts.allow_barred_gen = true;
        TermPtr t1 = random_term(rng, pctx.alphabet, opts);
        TermPtr t2 = rng.flip()
                         ? random_term(rng, pctx.alphabet, opts)
                         : mutate_equal(rng, t1, Variety::P,
                                        1 + static_cast<int>(rng.below(2)));
        crosscheck(t1, t2, pctx);  // throws DiscrepancyError on mismatch
        (void) err;
      });
}

SuiteResult run_suite(const std::string& name, const VarietyContext& ctx) {
  if (name == "identities") {
    return suite_identities(ctx);
  }
  if (name == "dmap") {
    return suite_dmap(ctx);
  }
  if (name == "oracle") {
    return suite_oracle(ctx);
  }
  if (name == "confluence") {
    return suite_confluence(ctx);
  }
  if (name == "eunitary") {
    return suite_eunitary(ctx);
  }
  if (name == "perfect-crosscheck") {
    return suite_perfect_crosscheck(ctx);
  }
  throw std::invalid_argument("unknown suite \"" + name + "\"");
}

}  // namespace birest
