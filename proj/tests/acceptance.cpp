// One PASS/FAIL line per acceptance criterion, each under its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "property_suite.hpp"
#include "rcalg/algebra_file.hpp"
#include "rcalg/errors.hpp"
#include "rcalg/expr.hpp"
#include "rcalg/brackets.hpp"
#include "rcalg/qseries.hpp"
#include "rcalg/verify.hpp"

using namespace rcalg;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

Verdict suites(std::initializer_list<const char*> names, const VerifyOptions& opt) {
  Verdict v{true, {}};
  for (const char* s : names) {
    const SuiteReport r = run_suite(s, opt);
    std::size_t ok = 0;
    for (const auto& c : r.checks) {
      if (c.pass) {
        ++ok;
      } else if (v.detail.find("first failure") == std::string::npos) {
        v.detail += "first failure: " + c.name + " " + c.detail + "; ";
      }
    }
    v.pass = v.pass && r.pass();
    v.detail += std::string(s) + " " + std::to_string(ok) + "/" + std::to_string(r.checks.size()) + "; ";
  }
  return v;
}

Verdict ac4() {
  const Extension ext = *load_algebra("classical").extension;
  const QSeries s = evaluate(kk_theta_e2(ext, 2), classical_assignment(30));
  const BasisMatch m = express_in_basis(s, 8, 30);
  if (!m.in_span) return {false, "not in span(E4^2)"};
  const Rational c = m.coefficients.front();
  return {m.monomials.size() == 1 && sgn(c) == 0, "constant " + to_string(c)};
}

Verdict ac5() {
  const LoadedAlgebra cl = load_algebra("classical");
  const GradedPoly b = standard_bracket(cl.D, parse_expr("E4", cl.algebra), parse_expr("E6", cl.algebra), 1);
  const QSeries s = evaluate(b, classical_assignment(30));
  const QSeries delta = delta_product(30);
  if (sgn(s[0]) != 0) return {false, "a0 = " + to_string(s[0])};
  const Rational c = s[1] / delta[1];
  const bool proportional = s == delta * c;
  return {proportional && c == Rational(-3456), "c = " + to_string(c) + (proportional ? "" : ", not proportional")};
}

Verdict ac9() {
  Verdict v{true, {}};
  unsigned total = 0;
  for (const auto& name : props::names()) {
    const props::Outcome o = props::run(name);
    total += o.cases;
    if (!o.pass()) {
      v.pass = false;
      v.detail += name + ": " + o.first_failure + "; ";
    }
  }
  v.detail += std::to_string(props::names().size()) + " properties, " + std::to_string(total) + " cases, seed " +
              std::to_string(props::kSeed);
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    double limit_seconds;
    std::function<Verdict()> run;
  };
  VerifyOptions defaults;
  VerifyOptions order50;
  order50.order = 50;
  VerifyOptions quintic;
  quintic.algebra = "mirror_quintic";

  const Criterion criteria[] = {
      {"AC1", 30, [&] { return suites({"thm-main1"}, defaults); }},
      {"AC2", 30, [&] { return suites({"kk"}, defaults); }},
      {"AC3", 5, [&] { return suites({"ramanujan"}, order50); }},
      {"AC4", 5, ac4},
      {"AC5", 5, ac5},
      {"AC6", 60, [&] { return suites({"ck"}, defaults); }},
      {"AC7", 10, [&] { return suites({"psi"}, defaults); }},
      {"AC8", 60, [&] { return suites({"sl2", "rrc-shape", "relation"}, quintic); }},
      {"AC9", 120, ac9},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = v.pass && in_time;
    if (!pass) ++failures;
    std::printf("%s %s (%.2f s, limit %.0f s%s) %s\n", c.id, pass ? "PASS" : "FAIL", secs, c.limit_seconds,
                in_time ? "" : ", too slow", v.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
