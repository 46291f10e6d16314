#include <doctest.h>

#include "oracles.hpp"
#include "rcalg/algebra_file.hpp"
#include "rcalg/errors.hpp"
#include "rcalg/expr.hpp"
#include "rcalg/qseries.hpp"

using namespace rcalg;

namespace {

const Extension& classical() {
  static const Extension ext = *load_algebra("classical").extension;
  return ext;
}

const Extension& negweights() {
  static const Extension ext = *load_algebra("negweights").extension;
  return ext;
}

const Extension& fracweights() {
  static const Extension ext = *load_algebra("fracweights").extension;
  return ext;
}

GradedPoly x(const Extension& ext, const char* text) { return parse_expr(text, ext.extended()); }
GradedPoly b(const Extension& ext, const char* text) { return parse_expr(text, ext.base()); }

}  // namespace

TEST_CASE("the extended derivation on generators") {
  const Extension& ext = classical();
  CHECK(ext.e2_name() == "e2");
  CHECK(ext.e2_index() == ext.base()->size());
  CHECK(ext.D().apply(x(ext, "E4")) == x(ext, "-1/3*E6 + 4*e2*E4"));
  CHECK(ext.D().apply(ext.e2()) == ext.lift(ext.canonical().lambda()) + ext.e2() * ext.e2());
  CHECK(ext.D().apply(GradedPoly::constant(ext.extended(), 1)).is_zero());
  CHECK(ext.D().declared_degree() == Rational(2));
}

TEST_CASE("extension name collisions are rejected") {
  CHECK_THROWS_AS(Extension::build(classical().canonical(), "E4"), ValidationError);
}

TEST_CASE("E2 profiles and membership") {
  const Extension& ext = classical();
  const GradedPoly lambda = ext.canonical().lambda();
  const auto p = e2_profile(ext.lift(lambda) + ext.e2() * ext.e2(), ext);
  REQUIRE(p.size() == 2);
  CHECK(p.at(0) == lambda);
  CHECK(p.at(2) == GradedPoly::constant(ext.base(), 1));
  const auto q = e2_profile(x(ext, "E4*E6"), ext);
  REQUIRE(q.size() == 1);
  CHECK(q.at(0) == b(ext, "E4*E6"));
  CHECK(e2_profile(GradedPoly(ext.extended()), ext).empty());
  CHECK(ext.in_base(x(ext, "E4^2")));
  CHECK_FALSE(ext.in_base(x(ext, "E4*e2")));
  CHECK_THROWS_AS(ext.lower(x(ext, "E4*e2")), PreconditionError);
}

TEST_CASE("canonical iterates through powers of D") {
  struct Case {
    const Extension* ext;
    const char* f;
  };
  const std::vector<Case> cases = {{&negweights(), "c"},   {&negweights(), "b"},   {&negweights(), "a"},
                                   {&negweights(), "a*u"}, {&negweights(), "u"},   {&negweights(), "u^2"},
                                   {&negweights(), "u^3"}, {&fracweights(), "h"},  {&classical(), "E4"}};
  for (const auto& c : cases) {
    const GradedPoly f = b(*c.ext, c.f);
    const auto iterates = canonical_iterates(c.ext->canonical(), f, 8);
    for (unsigned n = 0; n <= 8; ++n) {
      CAPTURE(c.f);
      CAPTURE(n);
      const GradedPoly lhs = c.ext->lift(iterates[n]);
      CHECK(lhs == e2_expansion(*c.ext, f, n));
      CHECK(lhs == e2_expansion_by_cases(*c.ext, f, n));
    }
  }
}

TEST_CASE("Psi sequence") {
  const Extension& ext = classical();
  const CanonicalData& cd = ext.canonical();
  const GradedPoly L = cd.lambda();
  CHECK(ext.psi(0).is_zero());
  CHECK(ext.psi(1) == L);
  CHECK(ext.psi(2) == cd.partial().apply(L));
  CHECK(ext.psi(3) == cd.partial().iterate(L, 2) + L * L * Rational(6));
  for (unsigned n = 1; n <= 8; ++n) {
    CHECK(weight_of(ext.psi(n)).kind != Homogeneity::Kind::Inhomogeneous);
    const GradedPoly rest = canonical_iterate(ext.extended_canonical(), ext.e2(), n) -
                            ext.e2().pow(n + 1) * Rational(oracle::factorial(n) * (n % 2 == 0 ? 1 : -1));
    CHECK(rest == ext.lift(ext.psi(n)));
  }
}

TEST_CASE("Psi memoization is safe under concurrent use") {
  const Extension fresh = *load_algebra("negweights").extension;
  std::vector<GradedPoly> parallel(24, GradedPoly(fresh.base()));
#pragma omp parallel for
  for (int i = 0; i < 24; ++i) parallel[i] = fresh.psi(static_cast<unsigned>(i % 8));
  for (int i = 0; i < 24; ++i) CHECK(parallel[i] == negweights().psi(static_cast<unsigned>(i % 8)));
}

TEST_CASE("powers of D on E2") {
  const Extension& ext = classical();
  const GradedPoly E2 = ext.e2(), L = ext.lift(ext.canonical().lambda());
  CHECK(d_power_e2(ext, 0) == L + E2 * E2);
  const GradedPoly dL = ext.lift(ext.canonical().partial().apply(ext.canonical().lambda()));
  CHECK(d_power_e2(ext, 1) == dL + E2 * L * Rational(6) + E2.pow(3) * Rational(2));
  for (unsigned n = 0; n <= 8; ++n) {
    CHECK(d_power_e2_closed_form(ext, n) == ext.D().iterate(E2, n + 1));
    CHECK(d_power_e2_closed_form(negweights(), n) == negweights().D().iterate(negweights().e2(), n + 1));
  }
}

TEST_CASE("alternating factorial sum") {
  for (unsigned n = 0; n <= 12; ++n) {
    Integer s = 0;
    for (unsigned j = 0; j <= n + 1; ++j) {
      const Integer t = oracle::factorial(n + 1) * oracle::factorial(n + 2) /
                        (oracle::factorial(j + 1) * oracle::factorial(n + 1 - j));
      s += j % 2 == 0 ? t : Integer(-t);
    }
    CHECK(s == oracle::factorial(n + 1));
    CHECK(d_power_binomial_sum(n) == s);
  }
}

TEST_CASE("canonical and extended brackets agree") {
  for (const auto& [ext, f, g, n] : std::vector<std::tuple<const Extension*, const char*, const char*, unsigned>>{
           {&classical(), "E4", "E6", 6}, {&negweights(), "b", "c", 8}, {&fracweights(), "h", "g", 6}}) {
    for (const auto& c : verify_bracket_equality(*ext, b(*ext, f), b(*ext, g), n)) {
      CAPTURE(f);
      CAPTURE(c.n);
      CHECK(c.equal);
      CHECK(c.difference.is_zero());
    }
  }
  const Extension& ext = classical();
  for (const auto& c : verify_bracket_equality(ext, b(ext, "E4"), b(ext, "1"), 5)) {
    if (c.n > 0) CHECK(canonical_bracket(ext.canonical(), b(ext, "E4"), b(ext, "1"), c.n).is_zero());
    CHECK(c.equal);
  }
}

TEST_CASE("theta operators") {
  const Extension& ext = classical();
  const GradedPoly E4 = b(ext, "E4");
  CHECK(kk_theta_f(ext, E4, 0) == ext.lift(ext.canonical().partial().apply(E4)));
  const GradedPoly t1 = kk_theta_f(ext, E4, 1);
  REQUIRE(ext.in_base(t1));
  const GradedPoly t1b = ext.lower(t1);
  CHECK((t1b.is_zero() || divide_exact(t1b, b(ext, "E4^2")).has_value()));
  for (unsigned n = 0; n <= 4; ++n) CHECK(kk_theta_f(ext, b(ext, "1"), n).is_zero());
  CHECK(kk_theta_e2(ext, 1).is_zero());
  CHECK(kk_theta_e2(ext, 0) == ext.lift(ext.canonical().lambda()) * Rational(2));
  const GradedPoly chazy = kk_theta_e2(ext, 2);
  REQUIRE(ext.in_base(chazy));
  CHECK((chazy.is_zero() || divide_exact(ext.lower(chazy), b(ext, "E4^2")).has_value()));
  CHECK_THROWS_AS(kk_theta_f(ext, x(ext, "e2*E4"), 1), PreconditionError);
  CHECK_THROWS_AS(kk_theta_f(ext, b(ext, "E4 + E6"), 1), InhomogeneousError);
}

TEST_CASE("sign of the classical Lambda") {
  const Extension& ext = classical();
  const std::vector<Rational> passing =
      calibrate_lambda(ext.canonical().partial(), {Rational(1, 144), Rational(-1, 144)}, 20, 4);
  REQUIRE(passing.size() == 1);
  CHECK(passing.front() == Rational(-1, 144));
  CHECK(classical_lambda_coefficient() == passing.front());
  CHECK(ext.canonical().lambda() == b(ext, "E4") * passing.front());
}
