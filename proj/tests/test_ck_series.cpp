#include <doctest.h>

#include "oracles.hpp"
#include "rcalg/algebra_file.hpp"
#include "rcalg/brackets.hpp"
#include "rcalg/ck_series.hpp"
#include "rcalg/errors.hpp"
#include "rcalg/expr.hpp"

using namespace rcalg;

namespace {

const Extension& negweights() {
  static const Extension ext = *load_algebra("negweights").extension;
  return ext;
}

const Extension& classical() {
  static const Extension ext = *load_algebra("classical").extension;
  return ext;
}

GradedPoly x(const Extension& ext, const char* text) { return parse_expr(text, ext.extended()); }

}  // namespace

TEST_CASE("XSeries arithmetic") {
  const Extension& ext = classical();
  const GradedPoly E2 = ext.e2();
  const XSeries up = exp_series(E2, 6, 1), down = exp_series(E2, 6, -1);
  CHECK(up[3] == E2.pow(3) / Rational(6));
  CHECK(down[3] == E2.pow(3) / Rational(-6));
  CHECK(up.reflected() == down);
  CHECK(up.reflected().reflected() == up);
  XSeries one(ext.extended(), 6);
  one.set(0, GradedPoly::constant(ext.extended(), 1));
  CHECK(up * down == one);
  const XSeries s(ext.extended(), 4, {x(ext, "E4"), x(ext, "E6"), x(ext, "e2")});
  CHECK(s[2] == x(ext, "e2"));
  CHECK(s[4].is_zero());
  CHECK((s * up).order() == 4);
  CHECK((s - s) == XSeries(ext.extended(), 4));
  CHECK_THROWS_AS(one.set(7, E2), PreconditionError);
}

TEST_CASE("CK coefficients for a positive weight") {
  const Extension& ext = classical();
  const GradedPoly E4 = x(ext, "E4");
  const CKPair ck = ck_series(CkKind::DPower, ext, E4, 4);
  CHECK(ck.minus == XSeries(ext.extended(), 4));
  for (unsigned n = 0; n <= 4; ++n) {
    CHECK(ck.plus[n] * Rational(oracle::factorial(n)) * oracle::rising(Rational(4), n) == ext.D().iterate(E4, n));
  }
}

TEST_CASE("CK split for weight -1") {
  const Extension& ext = negweights();
  const GradedPoly a = x(ext, "a");
  const auto d = ext.D().iterates(a, 4);
  const CKPair ck = ck_series(CkKind::DPower, ext, a, 4);
  CHECK(ck.minus[0] == a);
  CHECK(ck.minus[1] == -d[1]);
  for (unsigned n = 2; n <= 4; ++n) {
    CHECK(ck.minus[n].is_zero());
    CHECK(ck.plus[n] * Rational(oracle::factorial(n) * oracle::factorial(n - 2)) == d[n]);
  }
  CHECK(ck.plus[0].is_zero());
  CHECK(ck.plus[1].is_zero());
}

TEST_CASE("A_n terms") {
  const Extension& ext = negweights();
  const GradedPoly a = x(ext, "a"), E2 = ext.e2();
  CHECK(a_n_term(ext, a, 2) == E2 * E2 * a / Rational(2) + E2 * ext.D().apply(a));
  CHECK(a_n_term(ext, a, 3) == -(E2.pow(3) * a / Rational(6) + E2 * E2 * ext.D().apply(a) / Rational(2)));
  CHECK_THROWS_AS(a_n_term(ext, a, 1), PreconditionError);
  CHECK_THROWS_AS(a_n_term(ext, x(ext, "u"), 3), PreconditionError);
}

TEST_CASE("twisting by exp(-E2 X)") {
  const Extension& ext = negweights();
  for (const char* f : {"c", "b", "a", "a*u", "u", "u^2", "u^3", "b*u^2"}) {
    for (const auto& c : verify_ck_twist(ext, x(ext, f), 8)) {
      CAPTURE(f);
      CAPTURE(c.name);
      CHECK(c.holds);
    }
  }
  for (const auto& c : verify_ck_twist(ext, ext.e2(), 8)) CHECK(c.holds);
}

TEST_CASE("CK products recover the brackets") {
  const Extension& ext = classical();
  const GradedPoly f = x(ext, "E4"), g = x(ext, "E6");
  const XSeries prod = ck_series(CkKind::DPower, ext, f, 6).plus.reflected() * ck_series(CkKind::DPower, ext, g, 6).plus;
  for (unsigned n = 0; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(prod[n] * oracle::rising(Rational(4), n) * oracle::rising(Rational(6), n) == standard_bracket(ext.D(), f, g, n));
  }
  const Extension& nw = negweights();
  for (const auto& [p, q] : std::vector<std::pair<const char*, const char*>>{{"a", "b"}, {"c", "c"}, {"u", "u^2"}, {"a*u", "b"}}) {
    for (const auto& c : verify_ck_products(nw, x(nw, p), x(nw, q), 8)) {
      CAPTURE(p);
      CAPTURE(q);
      CAPTURE(c.name);
      CHECK(c.holds);
    }
  }
}
