// Copyright 2026 The dlash Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dlash/cli/app.hpp"

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dlash/cli/expr.hpp"
#include "dlash/dyer_lashof/adem.hpp"
#include "dlash/dyer_lashof/total_power.hpp"
#include "dlash/steenrod/dual.hpp"
#include "dlash/verify/acceptance.hpp"

namespace dlash::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::int64_t kMaxDegreeBound = std::int64_t{1} << 20;

struct Options {
  bool json = false;
  bool quiet = false;
  std::int64_t degree_bound = laurent::kDefaultDegreeBound;
};

Json envelope(const char* command, const Options& opt) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  j["degree_bound"] = opt.degree_bound;
  return j;
}

Json report_json(const steenrod::Report& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"identity", row.identity}, {"index", row.index}, {"pass", row.pass}, {"mismatch", row.mismatch}});
  }
  return {{"title", r.title}, {"window", r.window}, {"passed", r.passed()}, {"rows", rows}};
}

// Prints reports and returns the exit status.
int emit_reports(const char* command, const std::vector<steenrod::Report>& reports, const Options& opt,
                 std::ostream& out) {
  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed();
  if (opt.json) {
    Json j = envelope(command, opt);
    j["passed"] = passed;
    j["reports"] = Json::array();
    for (const auto& r : reports) j["reports"].push_back(report_json(r));
    out << j.dump(2) << "\n";
  } else if (!opt.quiet) {
    for (std::size_t k = 0; k < reports.size(); ++k) {
      if (k > 0) out << "\n";
      out << reports[k].to_text();
    }
  }
  return passed ? kExitOk : kExitFailure;
}

std::string series_window(const laurent::LaurentSeries& a) { return a.window().to_string(); }

int cmd_adem(int i, int j, const Options& opt, std::ostream& out) {
  auto rel = dl::adem_relation(i, j);
  if (opt.json) {
    Json j_out = envelope("adem", opt);
    j_out["i"] = i;
    j_out["j"] = j;
    Json rhs = Json::array();
    for (const auto& [a, b] : rel.rhs) rhs.push_back({a, b});
    j_out["rhs"] = rhs;
    j_out["relation"] = rel.to_string();
    out << j_out.dump(2) << "\n";
  } else {
    out << rel.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_reduce(const std::string& text, const Options& opt, std::ostream& out) {
  dl::DLSum input = to_sum(parse_expression(text));
  dl::DLSum reduced = dl::reduce_to_admissible(input);
  if (opt.json) {
    Json j = envelope("reduce", opt);
    j["input"] = input.to_string();
    j["result"] = reduced.to_string();
    Json words = Json::array();
    for (const auto& w : reduced.words()) words.push_back(w);
    j["words"] = words;
    out << j.dump(2) << "\n";
  } else {
    out << input.to_string() << " = " << reduced.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_symmetry(int n, int bound, const Options& opt, std::ostream& out) {
  dl::GradedClass x{"x", n};
  const laurent::Window window = laurent::Window::bivariate(n, bound, 3 * n, bound);
  auto relations = dl::symmetry_extract_relations(x, window);
  std::vector<dl::DLSum> sums;
  for (const auto& r : relations) sums.push_back(r.relation);
  auto solution = dl::solve_relations(sums);

  if (opt.json) {
    Json j = envelope("symmetry", opt);
    j["class"] = x.to_string();
    j["window"] = window.to_string();
    Json rels = Json::array();
    for (const auto& r : relations) {
      if (!r.relation.is_zero()) rels.push_back({{"cell", {r.cell.s, r.cell.t}}, {"relation", r.relation.to_string()}});
    }
    j["relations"] = rels;
    Json derived = Json::array();
    for (const auto& [w, rhs] : solution.expressed) {
      derived.push_back({{"word", w}, {"lhs", dl::DLMonomial{w, x}.to_string()}, {"rhs", rhs.to_string()}});
    }
    j["derived"] = derived;
    Json unresolved = Json::array();
    for (const auto& w : solution.unresolved) unresolved.push_back(w);
    j["unresolved"] = unresolved;
    j["admissible_dependencies"] = solution.admissible_dependencies.size();
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  if (!opt.quiet) out << "window: " << window.to_string() << "\n";
  std::size_t nonzero = 0;
  for (const auto& r : relations) {
    if (r.relation.is_zero()) continue;
    ++nonzero;
    if (!opt.quiet) out << "(" << r.cell.s << ", " << r.cell.t << "): " << r.relation.to_string() << " = 0\n";
  }
  if (!opt.quiet) out << nonzero << " relations; derived:\n";
  for (const auto& [w, rhs] : solution.expressed) {
    out << dl::DLMonomial{w, x}.to_string() << " = " << rhs.to_string() << "\n";
  }
  for (const auto& w : solution.unresolved) out << "unresolved: " << dl::DLMonomial{w, x}.to_string() << "\n";
  for (const auto& d : solution.admissible_dependencies) out << "admissible dependency: " << d.to_string() << "\n";
  return kExitOk;
}

int cmd_zeta_action(int n, const Options& opt, std::ostream& out) {
  auto q = steenrod::q_total_on_zeta(n, opt.degree_bound);
  const std::string lhs = n == 0 ? "Q(t) 1" : "Q(t) z" + std::to_string(n);
  if (opt.json) {
    Json j = envelope("zeta-action", opt);
    j["n"] = n;
    j["window"] = series_window(q);
    Json terms = Json::array();
    for (const auto& [e, c] : q.terms()) terms.push_back({{"t", e.t}, {"coefficient", c.to_string()}});
    j["terms"] = terms;
    j["series"] = q.to_string();
    out << j.dump(2) << "\n";
  } else {
    if (!opt.quiet) out << "window: " << series_window(q) << "\n";
    out << lhs << " = " << q.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_conjugate(int max_i, const Options& opt, std::ostream& out) {
  auto zbar = steenrod::conjugate_zeta(max_i, opt.degree_bound);
  if (opt.json) {
    Json j = envelope("conjugate", opt);
    Json list = Json::array();
    for (int i = 1; i <= max_i; ++i) list.push_back({{"i", i}, {"zbar", zbar[i].to_string()}});
    j["conjugates"] = list;
    out << j.dump(2) << "\n";
  } else {
    if (!opt.quiet) out << "from the reversion of zeta(t) through t^" << opt.degree_bound << "\n";
    for (int i = 1; i <= max_i; ++i) out << "zbar_" << i << " = " << zbar[i].to_string() << "\n";
  }
  return kExitOk;
}

int cmd_steinberger(int max_i, const Options& opt, std::ostream& out) {
  std::vector<steenrod::Report> reports;
  if (max_i >= 2) reports.push_back(steenrod::verify_steinberger_conjugate(max_i, opt.degree_bound));
  if (max_i >= 1) reports.push_back(steenrod::verify_steinberger_successor(max_i - 1, 0, opt.degree_bound));
  return emit_reports("steinberger", reports, opt, out);
}

int cmd_nishida(const Options& opt, std::ostream& out) {
  return emit_reports("nishida",
                      {steenrod::verify_bisson_joyal_identity1(opt.degree_bound),
                       steenrod::verify_nishida_conjugate_form(opt.degree_bound)},
                      opt, out);
}

int cmd_verify_all(const Options& opt, std::ostream& out) {
  auto results = verify::run_acceptance(opt.degree_bound);
  bool passed = true;
  for (const auto& r : results) passed = passed && r.pass;
  if (opt.json) {
    Json j = envelope("verify-all", opt);
    j["passed"] = passed;
    Json list = Json::array();
    for (const auto& r : results) {
      list.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    j["criteria"] = list;
    out << j.dump(2) << "\n";
  } else if (!opt.quiet) {
    std::size_t ok = 0;
    for (const auto& r : results) {
      out << format_result(r) << "\n";
      ok += r.pass ? 1 : 0;
    }
    out << ok << "/" << results.size() << " criteria passed\n";
  }
  return passed ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"dlash: mod-2 power operations, Adem relations and the dual Steenrod algebra"};
  app.name("dlash");
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json, "Render results as JSON");
  app.add_flag("--quiet", opt.quiet, "Print only results, no windows or tables");
  if (const char* env = std::getenv("DLASH_DEGREE_BOUND"); env != nullptr && *env != '\0') {
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), opt.degree_bound);
    if (ec != std::errc{} || *ptr != '\0' || opt.degree_bound < 1 || opt.degree_bound > kMaxDegreeBound) {
      err << "DLASH_DEGREE_BOUND must be an integer in [1, " << kMaxDegreeBound << "], got '" << env << "'\n";
      return kExitUsage;
    }
  }
  app.add_option("--degree-bound", opt.degree_bound,
                 "Degree bound D of the truncation window (default 32, or DLASH_DEGREE_BOUND)")
      ->check(CLI::Range(std::int64_t{1}, kMaxDegreeBound));

  int i = 0;
  int j = 0;
  auto* adem = app.add_subcommand("adem", "Adem relation for Q^i Q^j, i > 2j");
  adem->add_option("i", i)->required();
  adem->add_option("j", j)->required();

  std::string expr;
  auto* reduce = app.add_subcommand("reduce", "Reduce a sum of Q-words to admissible form");
  reduce->add_option("expr", expr, "e.g. 'Q^6 Q^2 x[2] + Q^4 x[2]'")->required();

  int n = 0;
  int bound = 0;
  auto* symmetry = app.add_subcommand("symmetry", "Relations from the symmetry of Q(t)Q(s)x, |x| = n");
  symmetry->add_option("n", n)->required();
  symmetry->add_option("bound", bound, "Largest i+j")->required()->check(CLI::Range(0, 64));

  int zn = 0;
  auto* zeta_action = app.add_subcommand("zeta-action", "Q(t) z_n through t^D");
  zeta_action->add_option("n", zn)->required()->check(CLI::Range(0, 20));

  int max_i = 0;
  auto* conjugate = app.add_subcommand("conjugate", "Conjugates zbar_1 .. zbar_max_i");
  conjugate->add_option("max_i", max_i)->required()->check(CLI::Range(1, 30));

  int st_max = 0;
  auto* steinberger = app.add_subcommand("steinberger", "Steinberger's corollaries up to max_i");
  steinberger->add_option("max_i", st_max)->required()->check(CLI::Range(1, 30));

  auto* nishida = app.add_subcommand("nishida", "Bisson-Joyal identity (1) and the Nishida conjugate form at D");
  auto* verify_all = app.add_subcommand("verify-all", "Run the acceptance suite; D sets the identity checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*adem) return cmd_adem(i, j, opt, out);
    if (*reduce) return cmd_reduce(expr, opt, out);
    if (*symmetry) return cmd_symmetry(n, bound, opt, out);
    if (*zeta_action) return cmd_zeta_action(zn, opt, out);
    if (*conjugate) return cmd_conjugate(max_i, opt, out);
    if (*steinberger) return cmd_steinberger(st_max, opt, out);
    if (*nishida) return cmd_nishida(opt, out);
    if (*verify_all) return cmd_verify_all(opt, out);
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n  " << expr << "\n  " << std::string(e.offset(), ' ') << "^\n";
    return kExitFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace dlash::cli
