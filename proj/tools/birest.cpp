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
// Command-line surface. Exit codes: decide and idempotent answer with
// 0 (equal/true), 1 (unequal/false), 2 (error); suite and crosscheck
// with 0 (all pass), 1 (failures), 2 (error); closure and eval with
// 0 (ok), 2 (error).

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "birest/cayley.hpp"
#include "birest/errors.hpp"
#include "birest/ffbr.hpp"
#include "birest/munn.hpp"
#include "birest/suites.hpp"
#include "birest/word_oracle.hpp"

namespace {

using nlohmann::json;

struct Config {
  std::string alphabet = "x,y";
  std::string variety = "free";
  uint64_t budget = 100000;
  uint64_t seed = 0;
  std::string format = "text";
  std::string dot_path;
  std::string trace_path;
};

void add_common(CLI::App* cmd, Config* cfg) {
  cmd->add_option("--alphabet", cfg->alphabet,
                  "comma-separated generators (default x,y)");
  cmd->add_option("--variety", cfg->variety, "free | ls | rs | s | p")
      ->check(CLI::IsMember({"free", "ls", "rs", "s", "p"}));
  cmd->add_option("--budget", cfg->budget,
                  "closure event budget (default 100000)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg->seed, "seed for the randomized suites");
  cmd->add_option("--format", cfg->format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--dot", cfg->dot_path, "write a DOT rendering here");
  cmd->add_option("--trace", cfg->trace_path, "write the closure trace here");
}

birest::VarietyContext make_context(const Config& cfg) {
  birest::VarietyContext ctx{birest::Alphabet::parse(cfg.alphabet),
                             *birest::parse_variety(cfg.variety),
                             birest::ClosureBudget{cfg.budget}, cfg.seed};
  return ctx;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write \"" + path + "\"");
  }
  out << content;
}

json graph_json(const birest::InverseAutomaton& g, const birest::Alphabet& a) {
  json edges = json::array();
  for (const auto& e : g.edges()) {
    json rec;
    rec["src"] = e.src;
    rec["label"] = birest::label_name(e.lab, a);
    rec["barred"] = e.lab.barred;
    rec["dst"] = e.dst;
    edges.push_back(rec);
  }
  json out;
  out["vertices"] = g.num_vertices();
  out["start"] = g.start();
  out["end"] = g.end();
  out["edges"] = edges;
  out["canonical_hex"] = birest::to_hex(birest::canonical_serialize(g, a));
  return out;
}

int cmd_decide(const Config& cfg, const std::string& lhs,
               const std::string& rhs) {
  auto ctx = make_context(cfg);
  auto t1 = birest::parse_term(lhs, ctx.alphabet);
  auto t2 = birest::parse_term(rhs, ctx.alphabet);
  bool equal = birest::decide_equal(t1, t2, ctx);
  if (cfg.format == "json") {
    json out;
    out["command"] = "decide";
    out["variety"] = birest::variety_name(ctx.variety);
    out["left"] = lhs;
    out["right"] = rhs;
    out["equal"] = equal;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (equal ? "equal" : "unequal") << "\n";
  }
  return equal ? 0 : 1;
}

int cmd_closure(const Config& cfg, const std::string& word) {
  auto ctx = make_context(cfg);
  auto w = birest::parse_signed_word(word, ctx.alphabet);
  auto closure = birest::closure_of_word(w, ctx.variety, ctx.budget);
  if (!cfg.dot_path.empty()) {
    write_file(cfg.dot_path, birest::to_dot(closure.graph, ctx.alphabet));
  }
  if (!cfg.trace_path.empty()) {
    write_file(cfg.trace_path, closure.trace.to_text(ctx.alphabet));
  }
  if (cfg.format == "json") {
    json out;
    out["command"] = "closure";
    out["variety"] = birest::variety_name(ctx.variety);
    out["word"] = word;
    out["graph"] = graph_json(closure.graph, ctx.alphabet);
    out["events"] = closure.trace.events.size();
    std::cout << out.dump() << "\n";
  } else {
    std::cout << birest::canonical_serialize(closure.graph, ctx.alphabet);
    std::cout << "events: " << closure.trace.events.size() << "\n";
  }
  return 0;
}

int cmd_idempotent(const Config& cfg, const std::string& word) {
  auto ctx = make_context(cfg);
  auto w = birest::parse_signed_word(word, ctx.alphabet);
  bool idem = birest::is_idempotent(w, ctx.variety, ctx.budget);
  if (cfg.format == "json") {
    json out;
    out["command"] = "idempotent";
    out["variety"] = birest::variety_name(ctx.variety);
    out["word"] = word;
    out["idempotent"] = idem;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (idem ? "true" : "false") << "\n";
  }
  return idem ? 0 : 1;
}

int cmd_eval(const Config& cfg, const std::string& term) {
  auto ctx = make_context(cfg);
  auto t = birest::parse_term(term, ctx.alphabet);
  auto el = birest::eval(t, ctx);
  std::string u;
  for (birest::LetterId x : el.u) {
    u += ctx.alphabet.name(x);
  }
  if (!cfg.dot_path.empty()) {
    write_file(cfg.dot_path, birest::to_dot(el.e, ctx.alphabet));
  }
  if (cfg.format == "json") {
    json out;
    out["command"] = "eval";
    out["variety"] = birest::variety_name(ctx.variety);
    out["term"] = term;
    out["u"] = u;
    out["graph"] = graph_json(el.e, ctx.alphabet);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "u = " << (u.empty() ? "1" : u) << "\n"
              << birest::canonical_serialize(el.e, ctx.alphabet);
  }
  return 0;
}

int report_suite(const Config& cfg, const birest::SuiteResult& res,
                 const birest::VarietyContext& ctx) {
  if (cfg.format == "json") {
    json out;
    out["command"] = "suite";
    out["suite"] = res.name;
    out["variety"] = birest::variety_name(ctx.variety);
    out["seed"] = ctx.seed;
    out["cases"] = res.cases;
    out["failures"] = res.failures;
    out["messages"] = res.failure_messages;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "suite " << res.name << ": " << res.cases << " cases, "
              << res.failures << " failures\n";
    for (const auto& m : res.failure_messages) {
      std::cout << "  " << m << "\n";
    }
  }
  return res.ok() ? 0 : 1;
}

int cmd_suite(const Config& cfg, const std::string& name) {
  auto ctx = make_context(cfg);
  return report_suite(cfg, birest::run_suite(name, ctx), ctx);
}

int cmd_crosscheck(const Config& cfg) {
  auto ctx = make_context(cfg);
  ctx.variety = birest::Variety::P;
  return report_suite(cfg, birest::suite_perfect_crosscheck(ctx, 500), ctx);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"free F-birestriction monoids: evaluation, word problem, "
               "closures, and property suites"};
  app.require_subcommand(1);

  Config cfg_decide, cfg_closure, cfg_idem, cfg_eval, cfg_suite, cfg_cross;
  std::string lhs, rhs, word, term, suite_name;

  auto* decide = app.add_subcommand("decide", "decide equality of two terms");
  add_common(decide, &cfg_decide);
  decide->add_option("lhs", lhs, "first term")->required();
  decide->add_option("rhs", rhs, "second term")->required();

  auto* closure =
      app.add_subcommand("closure", "close the linear graph of a signed word");
  add_common(closure, &cfg_closure);
  closure->add_option("word", word, "signed word")->required();

  auto* idem = app.add_subcommand(
      "idempotent", "is the word idempotent in the universal inverse monoid");
  add_common(idem, &cfg_idem);
  idem->add_option("word", word, "signed word")->required();

  auto* eval_cmd =
      app.add_subcommand("eval", "evaluate a term into coordinates");
  add_common(eval_cmd, &cfg_eval);
  eval_cmd->add_option("term", term, "term")->required();

  auto* suite = app.add_subcommand("suite", "run a named property suite");
  add_common(suite, &cfg_suite);
  suite
      ->add_option("name", suite_name,
                   "identities | dmap | oracle | confluence | eunitary | "
                   "perfect-crosscheck")
      ->required();

  auto* cross = app.add_subcommand(
      "crosscheck", "compare the two perfect-variety models on random pairs");
  add_common(cross, &cfg_cross);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(decide)) {
      return cmd_decide(cfg_decide, lhs, rhs);
    }
    if (app.got_subcommand(closure)) {
      return cmd_closure(cfg_closure, word);
    }
    if (app.got_subcommand(idem)) {
      return cmd_idempotent(cfg_idem, word);
    }
    if (app.got_subcommand(eval_cmd)) {
      return cmd_eval(cfg_eval, term);
    }
    if (app.got_subcommand(suite)) {
      return cmd_suite(cfg_suite, suite_name);
    }
    if (app.got_subcommand(cross)) {
      return cmd_crosscheck(cfg_cross);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
