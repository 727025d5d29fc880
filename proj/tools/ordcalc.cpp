// ordcalc: command-line calculator for exact ordinal arithmetic below ε₀.
//
// Subcommands: eval, compare, laws, table, repl.  Results go to stdout,
// one per line; diagnostics go to stderr.  Exit codes: 0 on success (and
// for law runs whose outcomes all match their expected polarity), 1 when
// a law run misses its expected polarity, 2 on usage, parse or domain
// errors.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ord/classic.hpp"
#include "ord/expr.hpp"
#include "ord/jacobsthal.hpp"
#include "ord/laws.hpp"
#include "ord/natural.hpp"
#include "ord/superjac.hpp"

namespace {

void print_diagnostic(const ord::parse_error& e) {
  std::cerr << "parse error: " << e.what();
  if (!e.expected.empty()) {
    std::cerr << "; expected ";
    for (size_t i = 0; i < e.expected.size(); ++i) {
      if (i > 0) std::cerr << (i + 1 == e.expected.size() ? " or " : ", ");
      std::cerr << "'" << e.expected[i] << "'";
    }
  }
  std::cerr << "\n";
}

std::string render(const ord::Ordinal& v, const std::string& format) {
  if (format == "latex") return ord::print_latex(v);
  if (format == "json") return ord::print_json(v);
  return ord::print_text(v);
}

int run_eval(const std::string& text, const std::string& format) {
  try {
    ord::Ordinal v = ord::eval(ord::parse(text));
    std::cout << render(v, format) << "\n";
    return 0;
  } catch (const ord::parse_error& e) {
    print_diagnostic(e);
    return 2;
  } catch (const ord::eval_error& e) {
    std::cerr << "error: " << e.what() << " (input bytes " << e.begin << ".."
              << e.end << ")\n";
    return 2;
  } catch (const ord::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_compare(const std::string& e1, const std::string& e2) {
  try {
    ord::Ordinal a = ord::eval(ord::parse(e1));
    ord::Ordinal b = ord::eval(ord::parse(e2));
    auto c = ord::cmp(a, b);
    std::cout << (c == std::strong_ordering::less
                      ? "<"
                      : c == std::strong_ordering::greater ? ">" : "=")
              << "\n";
    return 0;
  } catch (const ord::parse_error& e) {
    print_diagnostic(e);
    return 2;
  } catch (const ord::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

std::string inputs_line(const std::vector<ord::Ordinal>& xs) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += " ";
    out += names[i < 8 ? i : 7];
    out += "=";
    out += ord::print_text(xs[i]);
  }
  return out;
}

int run_laws(const std::string& law, const ord::GenParams& params, int trials,
             bool json_out, unsigned threads) {
  std::vector<std::string> ids;
  if (law == "all") {
    for (const auto& info : ord::law_catalog()) ids.push_back(info.id);
  } else {
    ids.push_back(law);
  }
  ord::CheckOptions opts;
  opts.threads = threads;
  bool all_ok = true;
  nlohmann::ordered_json out;
  if (json_out) {
    out["seed"] = params.seed;
    out["trials"] = trials;
    out["params"] = {{"max_depth", params.max_depth},
                     {"max_terms", params.max_terms},
                     {"max_coeff", params.max_coeff}};
    out["laws"] = nlohmann::ordered_json::array();
  }
  try {
    for (const auto& id : ids) {
      ord::LawReport rep = ord::check_law(id, params, trials, opts);
      all_ok = all_ok && rep.passed();
      if (json_out) {
        out["laws"].push_back(ord::report_json(rep));
        continue;
      }
      std::cout << (rep.passed() ? "PASS" : "FAIL") << "  " << id;
      if (rep.expected_polarity == ord::Polarity::fails) {
        if (!rep.failures.empty()) {
          const auto& f = rep.failures.front();
          std::cout << "  counterexample: " << inputs_line(f.inputs)
                    << "  lhs=" << ord::print_text(f.lhs)
                    << " rhs=" << ord::print_text(f.rhs);
        } else {
          std::cout << "  no counterexample in " << rep.trials << " trials";
        }
      } else if (!rep.failures.empty()) {
        const auto& f = rep.failures.front();
        std::cout << "  " << rep.failures.size() << "/" << rep.trials
                  << " failures, first: " << inputs_line(f.inputs)
                  << "  lhs=" << ord::print_text(f.lhs)
                  << " rhs=" << ord::print_text(f.rhs);
      } else {
        std::cout << "  (" << rep.trials << " trials)";
      }
      std::cout << "\n";
    }
  } catch (const ord::unknown_law_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (json_out) std::cout << out.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

int run_table() {
  using ord::Ordinal;
  const Ordinal base = ord::ord_add(Ordinal::omega(), Ordinal::finite(2));
  const Ordinal two = Ordinal::finite(2);
  std::cout << "squares of w + 2 under the three exponentiations:\n";
  std::cout << "  ^   " << ord::print_text(ord::ord_pow(base, two)) << "\n";
  std::cout << "  j^  " << ord::print_text(ord::jac_pow(base, two)) << "\n";
  std::cout << "  #^  " << ord::print_text(ord::sj_pow(base, two)) << "\n";
  std::cout << "\n";

  struct Row {
    const char* label;
    const char* ids[3];  // successor-based, j-family, #-family
  };
  const Row rows[] = {
      {"addition assoc ", {"add-assoc", "nat-add-assoc", nullptr}},
      {"distributivity ", {"mul-left-distrib", "jacthm", "nat-mul-left-distrib"}},
      {"multiplic assoc", {"mul-assoc", "jaccor1", "nat-mul-assoc"}},
      {"power of sum   ", {"pow-add", "jaccor2", "mainthm"}},
      {"power of prod  ", {"pow-mul", "jaccor3", "maincor"}},
  };
  const ord::GenParams params;
  constexpr int kTrials = 50;
  bool all_ok = true;
  std::cout << "law grid (" << kTrials << " trials per cell, seed "
            << params.seed << "):\n";
  for (const auto& row : rows) {
    std::cout << "  " << row.label;
    for (const char* id : row.ids) {
      if (id == nullptr) {
        std::cout << "  [n/a]";
        continue;
      }
      ord::LawReport rep = ord::check_law(id, params, kTrials);
      all_ok = all_ok && rep.passed();
      std::cout << "  [" << (rep.passed() ? "ok " : "FAIL") << " " << id << "]";
    }
    std::cout << "\n";
  }
  return all_ok ? 0 : 1;
}

int run_repl() {
  std::string format = "text";
  std::string line;
  while (std::getline(std::cin, line)) {
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r");
    std::string trimmed = line.substr(b, e - b + 1);
    if (trimmed == ":q") break;
    if (trimmed == ":latex" || trimmed == ":json" || trimmed == ":text") {
      format = trimmed.substr(1);
      continue;
    }
    try {
      std::cout << render(ord::eval(ord::parse(trimmed)), format) << "\n";
    } catch (const ord::parse_error& err) {
      print_diagnostic(err);
    } catch (const ord::error& err) {
      std::cerr << "error: " << err.what() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact ordinal arithmetic below epsilon_0 in Cantor normal form"};
  app.require_subcommand(1);

  std::string expr_text;
  std::string format = "text";
  auto* cmd_eval = app.add_subcommand("eval", "evaluate an expression");
  cmd_eval->add_option("expr", expr_text, "expression to evaluate")->required();
  cmd_eval->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "latex", "json"}));

  std::string lhs_text, rhs_text;
  auto* cmd_compare =
      app.add_subcommand("compare", "compare two expressions: prints <, = or >");
  cmd_compare->add_option("expr1", lhs_text, "left expression")->required();
  cmd_compare->add_option("expr2", rhs_text, "right expression")->required();

  std::string law = "all";
  ord::GenParams params;
  int trials = 200;
  bool json_out = false;
  unsigned threads = 1;
  auto* cmd_laws =
      app.add_subcommand("laws", "verify algebraic laws on seeded random inputs");
  cmd_laws->add_option("--law", law, "law id or 'all'");
  cmd_laws->add_option("--seed", params.seed, "random seed");
  cmd_laws->add_option("--trials", trials, "trials per law");
  cmd_laws->add_option("--max-depth", params.max_depth, "exponent nesting bound");
  cmd_laws->add_option("--max-terms", params.max_terms, "terms per level");
  cmd_laws->add_option("--max-coeff", params.max_coeff, "coefficient bound");
  cmd_laws->add_flag("--json", json_out, "emit a JSON report");
  cmd_laws->add_option("--threads", threads, "worker threads for trials");

  auto* cmd_table = app.add_subcommand(
      "table", "print the distinguishing squares and the law grid");

  auto* cmd_repl =
      app.add_subcommand("repl", "read expressions line by line (:q quits)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (cmd_eval->parsed()) return run_eval(expr_text, format);
  if (cmd_compare->parsed()) return run_compare(lhs_text, rhs_text);
  if (cmd_laws->parsed()) return run_laws(law, params, trials, json_out, threads);
  if (cmd_table->parsed()) return run_table();
  if (cmd_repl->parsed()) return run_repl();
  return 2;
}
