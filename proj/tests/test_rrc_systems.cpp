#include <doctest.h>

#include "rcalg/algebra_file.hpp"
#include "rcalg/brackets.hpp"
#include "rcalg/errors.hpp"
#include "rcalg/expr.hpp"
#include "rcalg/rrc.hpp"

using namespace rcalg;

namespace {

GradedPoly p(const AlgebraPtr& alg, const char* text) { return parse_expr(text, alg); }

const CanonicalData& classical_data() {
  static const CanonicalData cd = load_algebra("classical").extension->canonical();
  return cd;
}

std::map<std::string, GradedPoly> first_brackets(const CanonicalData& cd, const GradedPoly& F) {
  std::map<std::string, GradedPoly> out;
  for (std::size_t i = 0; i < cd.algebra()->size(); ++i) {
    const std::string& name = cd.algebra()->name(i);
    out.emplace(name, canonical_bracket(cd, F, GradedPoly::generator(cd.algebra(), name), 1));
  }
  return out;
}

}  // namespace

TEST_CASE("builtin systems") {
  const BuiltinSystem cy = builtin("mirror_quintic");
  CHECK(cy.t1 == "t2");
  CHECK(cy.D.apply(p(cy.algebra, "t5")) == p(cy.algebra, "5*t2*t5"));
  CHECK(cy.D.apply(p(cy.algebra, "t4")) == p(cy.algebra, "-t7"));
  CHECK(cy.delta == Derivation::partial(cy.algebra, "t2", -1));
  const BuiltinSystem r = builtin("ramanujan");
  CHECK(r.D.apply(p(r.algebra, "t3")) == p(r.algebra, "1/2*t1*t3 - 1/2*t2^2"));
  CHECK_THROWS_AS(builtin("quartic"), ValidationError);
}

TEST_CASE("certification of the RRC shape") {
  const BuiltinSystem cy = builtin("mirror_quintic");
  const RrcCertificate ok = certify_rrc(cy.D, "t2");
  REQUIRE(ok.certified());
  CHECK(ok.violations.empty());
  CHECK(ok.system->P[*cy.algebra->index_of("t5")].is_zero());
  CHECK(certify_rrc(builtin("ramanujan_rescaled").D, "t1").certified());

  // the unscaled Ramanujan field has D t1 = t1^2/12 + ..., which is not of the shape
  const RrcCertificate bad = certify_rrc(builtin("ramanujan").D, "t1");
  CHECK_FALSE(bad.certified());
  CHECK_FALSE(bad.violations.empty());
  CHECK_FALSE(certify_rrc(cy.D, "t1").certified());

  const AlgebraPtr alg = AlgebraSpec::make(1, {{"s", Rational(2)}, {"y", Rational(4)}});
  const Derivation mixed(alg, {{"s", p(alg, "s^2 + y")}, {"y", p(alg, "4*s*y + s^3")}}, Rational(2));
  const RrcCertificate m = certify_rrc(mixed, "s");
  CHECK_FALSE(m.certified());
  REQUIRE(m.violations.size() == 1);
  CHECK(m.violations.front().generator == "y");
}

TEST_CASE("canonical data to RRC systems and back") {
  const CanonicalData& cd = classical_data();
  const RrcSystem sys = from_canonical(cd, "t1");
  const GradedPoly t1 = GradedPoly::generator(sys.algebra, "t1");
  CHECK(sys.D.apply(t1) == t1 * t1 + cd.lambda().in(sys.algebra));
  CHECK(sys.D.apply(p(sys.algebra, "E6")) == p(sys.algebra, "6*t1*E6 - 1/2*E4^2"));
  const CanonicalData back = strip(sys);
  CHECK(back.partial() == cd.partial().over(back.algebra()));
  CHECK(back.lambda() == cd.lambda().in(back.algebra()));
  CHECK(equivalent(from_canonical(back, "t1"), sys));
  CHECK_FALSE(equivalent(from_canonical(back, "t0"), sys));
  CHECK_THROWS_AS(from_canonical(cd, "E4"), ValidationError);
}

TEST_CASE("the trivial canonical algebra") {
  const AlgebraPtr alg = AlgebraSpec::make(1, {{"x", Rational(2)}});
  const CanonicalData cd(Derivation(alg, {{"x", GradedPoly(alg)}}, Rational(2)), GradedPoly(alg));
  const RrcSystem sys = from_canonical(cd);
  CHECK(sys.D.apply(p(sys.algebra, "t1")) == p(sys.algebra, "t1^2"));
  CHECK(sys.D.apply(p(sys.algebra, "x")) == p(sys.algebra, "2*t1*x"));
  CHECK(strip(sys).lambda().is_zero());
}

TEST_CASE("recovering canonical data from a form with exact quotients") {
  const CanonicalData& cd = classical_data();
  const GradedPoly Delta = p(cd.algebra(), "E4^3 - E6^2");
  REQUIRE(cd.partial().apply(Delta).is_zero());
  const BracketDataResult r = from_bracket_data(Delta, first_brackets(cd, Delta), canonical_bracket(cd, Delta, Delta, 2));
  REQUIRE(r.kind == BracketDataResult::Case::Canonical);
  CHECK(r.canonical.partial().apply(p(r.canonical.algebra(), "E4")) == p(r.canonical.algebra(), "-1/3*E6"));
  CHECK(r.canonical.lambda() == p(r.canonical.algebra(), "-1/144*E4"));
}

TEST_CASE("recovering canonical data by adjoining a reciprocal") {
  const CanonicalData& cd = classical_data();
  const GradedPoly E4 = p(cd.algebra(), "E4");
  const BracketDataResult r = from_bracket_data(E4, first_brackets(cd, E4), canonical_bracket(cd, E4, E4, 2));
  REQUIRE(r.kind == BracketDataResult::Case::Reciprocal);
  CHECK(r.reciprocal == "r");
  const AlgebraPtr& alg = r.canonical.algebra();
  CHECK(reduce_mod_relations(p(alg, "E4*r")) == p(alg, "1"));
  const GradedPoly e4 = p(alg, "E4"), e6 = p(alg, "E6");
  for (unsigned n = 0; n <= 3; ++n) {
    const GradedPoly expected = canonical_bracket(cd, E4, p(cd.algebra(), "E6"), n);
    CHECK(reduce_mod_relations(canonical_bracket(r.canonical, e4, e6, n)) == expected.in(alg));
  }
}

TEST_CASE("bracket data is validated") {
  const CanonicalData& cd = classical_data();
  const GradedPoly E4 = p(cd.algebra(), "E4");
  auto b1 = first_brackets(cd, E4);
  const GradedPoly b2 = canonical_bracket(cd, E4, E4, 2);
  CHECK_THROWS_AS(from_bracket_data(GradedPoly(cd.algebra()), b1, b2), PreconditionError);
  CHECK_THROWS_AS(from_bracket_data(p(cd.algebra(), "1"), b1, b2), PreconditionError);
  b1.erase("E6");
  CHECK_THROWS_AS(from_bracket_data(E4, b1, b2), ValidationError);
  const LoadedAlgebra nwl = load_algebra("negweights");
  const CanonicalData& nw = nwl.extension->canonical();
  const GradedPoly a = p(nw.algebra(), "a");
  CHECK_THROWS_AS(from_bracket_data(a, first_brackets(nw, a), canonical_bracket(nw, a, a, 2)), PreconditionError);
}

TEST_CASE("the mirror quintic change of variables") {
  const BuiltinSystem cy = builtin("mirror_quintic");
  REQUIRE(cy.D_before_substitution.has_value());
  REQUIRE(cy.delta_before_substitution.has_value());
  for (std::size_t i = 0; i < cy.algebra->size(); ++i) {
    const GradedPoly t = GradedPoly::generator(cy.algebra, cy.algebra->name(i));
    const GradedPoly phi_t = substitute(t, cy.substitution, cy.algebra);
    CAPTURE(cy.algebra->name(i));
    CHECK(substitute(phi_t, cy.substitution, cy.algebra) == t);
    // phi(D_before t) = D(phi t)
    CHECK(reduce_mod_relations(substitute(cy.D_before_substitution->apply(t), cy.substitution, cy.algebra) -
                               cy.D.apply(phi_t)).is_zero());
    CHECK(reduce_mod_relations(substitute(cy.delta_before_substitution->apply(t), cy.substitution, cy.algebra) -
                               cy.delta.apply(phi_t)).is_zero());
  }
}

TEST_CASE("stripping the mirror quintic") {
  const BuiltinSystem cy = builtin("mirror_quintic");
  const RrcCertificate cert = certify_rrc(cy.D, cy.t1);
  REQUIRE(cert.certified());
  const CanonicalData cd = strip(*cert.system);
  CHECK(cd.algebra()->size() == cy.algebra->size() - 1);
  CHECK(equivalent(from_canonical(cd, cy.t1), *cert.system));
}
