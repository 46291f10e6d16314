#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "rcalg/algebra_file.hpp"
#include "rcalg/brackets.hpp"
#include "rcalg/errors.hpp"
#include "rcalg/expr.hpp"
#include "rcalg/qseries.hpp"
#include "rcalg/verify.hpp"

using namespace rcalg;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct BracketArgs {
  std::string algebra = "classical";
  std::string f, g;
  long n = 0;
  std::string mode = "standard";
};

int cmd_bracket(const BracketArgs& a) {
  if (a.n < 0) {
    std::cerr << "error: --n must be a non-negative integer\n";
    return kExitUsage;
  }
  const LoadedAlgebra loaded = load_algebra(a.algebra);
  GradedPoly result(loaded.algebra);
  if (a.mode == "standard") {
    result = standard_bracket(loaded.D, parse_expr(a.f, loaded.algebra), parse_expr(a.g, loaded.algebra),
                              static_cast<unsigned>(a.n));
  } else {
    if (!loaded.extension) throw PreconditionError("algebra '" + a.algebra + "' carries no canonical data");
    const AlgebraPtr& base = loaded.extension->base();
    result = canonical_bracket(loaded.extension->canonical(), parse_expr(a.f, base), parse_expr(a.g, base),
                               static_cast<unsigned>(a.n));
  }
  if (loaded.algebra->num_relations() > 0) result = reduce_mod_relations(result);
  std::cout << format(result) << '\n';
  return 0;
}

struct VerifyArgs {
  std::string suite;
  std::optional<std::string> algebra;
  std::optional<unsigned> max_n;
  std::optional<unsigned> order;
  bool json = false;
  bool serial = false;
};

int cmd_verify(const VerifyArgs& a) {
  VerifyOptions options{a.algebra, a.max_n, a.order, a.serial ? Exec::Serial : Exec::Parallel};
  const SuiteReport report = run_suite(a.suite, options);
  if (a.json) {
    std::cout << report_to_json(report).dump(2) << '\n';
  } else {
    std::cout << report_to_text(report);
  }
  return report.pass() ? 0 : kExitFailure;
}

struct QexpArgs {
  std::string series;
  long order = 10;
  bool compact = false;
};

int cmd_qexp(const QexpArgs& a) {
  if (a.order < 0) {
    std::cerr << "error: --order must be a non-negative integer\n";
    return kExitUsage;
  }
  const auto order = static_cast<unsigned>(a.order);
  const AlgebraPtr alg = AlgebraSpec::make(1, {{"E2", Rational(2)}, {"E4", Rational(4)}, {"E6", Rational(6)}});
  const GradedPoly f = parse_expr(a.series, alg);
  const Assignment asg{{"E2", eisenstein(2, order)}, {"E4", eisenstein(4, order)}, {"E6", eisenstein(6, order)}};
  const QSeries s = evaluate(f, asg);
  if (a.compact) {
    std::string line;
    for (unsigned n = 0; n <= order; ++n) {
      if (sgn(s[n]) == 0) continue;
      std::string c = to_string(s[n]);
      std::string sign = c[0] == '-' ? " - " : " + ";
      if (c[0] == '-') c.erase(0, 1);
      if (line.empty()) sign = s[n] < 0 ? "-" : "";
      std::string term = n == 0 ? c : (c == "1" ? "" : c + "*") + (n == 1 ? "q" : "q^" + std::to_string(n));
      line += sign + term;
    }
    if (line.empty()) line = "0";
    std::cout << line << " + O(q^" << order + 1 << ")\n";
  } else {
    for (unsigned n = 0; n <= order; ++n) std::cout << n << ' ' << to_string(s[n]) << '\n';
  }
  return 0;
}

int cmd_export(const std::string& algebra, const std::string& output) {
  const auto j = definition_to_json(export_definition(load_algebra(algebra)));
  if (output.empty() || output == "-") {
    std::cout << j.dump(2) << '\n';
  } else {
    std::ofstream out(output);
    if (!out) throw ValidationError("cannot write '" + output + "'");
    out << j.dump(2) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Rankin-Cohen brackets on graded algebras"};
  app.require_subcommand(1);

  BracketArgs ba;
  auto* bracket = app.add_subcommand("bracket", "Compute the n-th bracket of two elements");
  bracket->add_option("--algebra", ba.algebra, "Built-in algebra name or JSON file")->capture_default_str();
  bracket->add_option("--f", ba.f, "First argument")->required();
  bracket->add_option("--g", ba.g, "Second argument")->required();
  bracket->add_option("--n", ba.n, "Bracket index")->required();
  bracket->add_option("--mode", ba.mode, "standard (from D) or canonical (from the Serre derivation and Lambda)")
      ->check(CLI::IsMember({"standard", "canonical"}))
      ->capture_default_str();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", va.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--algebra", va.algebra, "Built-in algebra name or JSON file");
  verify->add_option("--max-n", va.max_n, "Largest bracket or iterate index");
  verify->add_option("--order", va.order, "Truncation order");
  verify->add_flag("--json", va.json, "Print the report as JSON");
  verify->add_flag("--serial", va.serial, "Run the checks on one thread");

  QexpArgs qa;
  auto* qexp = app.add_subcommand("qexp", "Print a q-expansion in E2, E4, E6");
  qexp->add_option("--series", qa.series, "E2, E4, E6 or a polynomial in them")->required();
  qexp->add_option("--order", qa.order, "Truncation order")->capture_default_str();
  qexp->add_flag("--compact", qa.compact, "Single-line output");

  std::string export_algebra, export_output;
  auto* exp = app.add_subcommand("export", "Write an algebra definition as JSON");
  exp->add_option("--algebra", export_algebra, "Built-in algebra name or JSON file")->required();
  exp->add_option("--output", export_output, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*bracket) return cmd_bracket(ba);
    if (*verify) return cmd_verify(va);
    if (*qexp) return cmd_qexp(qa);
    return cmd_export(export_algebra, export_output);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
