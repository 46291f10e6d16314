#include "rcalg/rrc.hpp"

#include "rcalg/algebra_file.hpp"
#include "rcalg/errors.hpp"
#include "rcalg/expr.hpp"

namespace rcalg {

RrcCertificate certify_rrc(const Derivation& D, const std::string& t1_name) {
  const AlgebraPtr& alg = D.algebra();
  RrcCertificate cert;
  const auto t1 = alg->index_of(t1_name);
  if (!t1) {
    cert.violations.push_back({t1_name, "no such generator"});
    return cert;
  }
  if (alg->weight(*t1) != 2) cert.violations.push_back({t1_name, "weight is " + to_string(alg->weight(*t1)) + ", not 2"});
  const GradedPoly T = GradedPoly::generator(alg, t1_name);
  std::vector<GradedPoly> P;
  for (std::size_t i = 0; i < alg->size(); ++i) {
    const std::string& name = alg->name(i);
    if (!D.image(i)) {
      cert.violations.push_back({name, "no image"});
      P.emplace_back(alg);
      continue;
    }
    const GradedPoly t = GradedPoly::generator(alg, name);
    GradedPoly p = *D.image(i) - (i == *t1 ? T * T : T * t * alg->weight(i));
    if (p.mentions(*t1)) cert.violations.push_back({name, "remainder " + format(p) + " involves " + t1_name});
    auto h = weight_of(p);
    if (!h.homogeneous() || (h.kind == Homogeneity::Kind::Homogeneous && h.weight != alg->weight(i) + 2)) {
      cert.violations.push_back({name, "remainder " + format(p) + " is not homogeneous of weight " +
                                           to_string(alg->weight(i) + 2)});
    }
    P.push_back(std::move(p));
  }
  if (cert.violations.empty()) cert.system = RrcSystem{alg, D, *t1, std::move(P)};
  return cert;
}

RrcSystem from_canonical(const CanonicalData& cd, const std::string& t1_name) {
  const Extension ext = Extension::build(cd, t1_name);
  RrcCertificate cert = certify_rrc(ext.D(), t1_name);
  if (!cert.certified()) throw Error("extension of canonical data failed the RRC shape check");
  return *cert.system;
}

CanonicalData strip(const RrcSystem& system) {
  const AlgebraPtr& alg = system.algebra;
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < alg->size(); ++i) {
    if (i != system.t1) gens.push_back(alg->generators()[i]);
  }
  AlgebraPtr base = AlgebraSpec::make(alg->grading_denominator(), gens);
  if (alg->num_relations() > 0) {
    for (const auto& r : alg->relations()) {
      if (r.mentions(system.t1)) throw PreconditionError("a relation involves " + system.t1_name());
    }
    base = AlgebraSpec::with_relations(base, alg->relations());
  }
  std::map<std::string, GradedPoly> images;
  for (std::size_t i = 0; i < alg->size(); ++i) {
    if (i != system.t1) images.emplace(alg->name(i), system.P[i].in(base));
  }
  return CanonicalData(Derivation(base, images, Rational(2)), system.P[system.t1].in(base));
}

bool equivalent(const RrcSystem& a, const RrcSystem& b) {
  const AlgebraPtr &x = a.algebra, &y = b.algebra;
  if (x->size() != y->size() || x->grading_denominator() != y->grading_denominator()) return false;
  if (a.t1_name() != b.t1_name()) return false;
  for (std::size_t i = 0; i < x->size(); ++i) {
    const auto j = y->index_of(x->name(i));
    if (!j || y->weight(*j) != x->weight(i)) return false;
  }
  const auto rx = x->relations(), ry = y->relations();
  if (rx.size() != ry.size()) return false;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    if (!(rx[i].in(y) == ry[i])) return false;
  }
  for (std::size_t i = 0; i < x->size(); ++i) {
    const auto& ia = a.D.image(i);
    const auto& ib = b.D.image(x->name(i));
    if (!ia || !ib || !(ia->in(y) == *ib)) return false;
  }
  return true;
}

BracketDataResult from_bracket_data(const GradedPoly& F, const std::map<std::string, GradedPoly>& bracket1,
                                    const GradedPoly& bracket2_ff, const std::string& reciprocal_name) {
  const AlgebraPtr& alg = F.algebra();
  if (F.is_zero()) throw PreconditionError("F must be nonzero");
  const Rational w = require_weight(F, "from_bracket_data");
  if (w == 0 || w == -1) throw PreconditionError("from_bracket_data needs weight w with w^2 (w+1) != 0");
  if (alg->num_relations() > 0 && reduce_mod_relations(F).is_zero()) {
    throw PreconditionError("F vanishes modulo the relations and is a zero divisor");
  }
  for (std::size_t i = 0; i < alg->size(); ++i) {
    if (!bracket1.count(alg->name(i))) throw ValidationError("missing [F, " + alg->name(i) + "]_1");
  }
  const Rational lambda_scale = 1 / (w * w * (w + 1));

  // Case I: exact division by F and F^2.
  std::map<std::string, GradedPoly> images;
  bool exact = true;
  for (std::size_t i = 0; i < alg->size() && exact; ++i) {
    const auto q = divide_exact(bracket1.at(alg->name(i)).in(alg), F);
    if (q) images.emplace(alg->name(i), *q / w);
    exact = q.has_value();
  }
  std::optional<GradedPoly> lambda_q;
  if (exact) lambda_q = divide_exact(bracket2_ff.in(alg), F * F);
  if (exact && lambda_q) {
    return {BracketDataResult::Case::Canonical,
            CanonicalData(Derivation(alg, images, Rational(2)), *lambda_q * lambda_scale), {}};
  }

  // Case II: adjoin r = 1/F.
  auto gens = alg->generators();
  gens.push_back({reciprocal_name, -w});
  AlgebraPtr hat = AlgebraSpec::make(alg->grading_denominator(), gens);
  std::vector<GradedPoly> rels;
  for (const auto& rel : alg->relations()) rels.push_back(rel.in(hat));
  const GradedPoly r = GradedPoly::generator(hat, reciprocal_name);
  rels.push_back(F.in(hat) * r - GradedPoly::constant(hat, 1));
  hat = AlgebraSpec::with_relations(hat, rels);
  const GradedPoly rh = GradedPoly::generator(hat, reciprocal_name);
  std::map<std::string, GradedPoly> hat_images;
  for (std::size_t i = 0; i < alg->size(); ++i) {
    hat_images.emplace(alg->name(i), bracket1.at(alg->name(i)).in(hat) * rh / w);
  }
  hat_images.emplace(reciprocal_name, GradedPoly(hat));
  const GradedPoly lambda = bracket2_ff.in(hat) * rh * rh * lambda_scale;
  return {BracketDataResult::Case::Reciprocal, CanonicalData(Derivation(hat, hat_images, Rational(2)), lambda),
          reciprocal_name};
}

BuiltinSystem builtin(const std::string& name) {
  if (name != "ramanujan" && name != "ramanujan_rescaled" && name != "mirror_quintic") {
    throw ValidationError("unknown built-in system '" + name + "'");
  }
  LoadedAlgebra loaded = load(*builtin_definition(name));
  const AlgebraPtr& alg = loaded.algebra;
  BuiltinSystem out{alg, loaded.D, Derivation::weight(alg), *loaded.delta, *loaded.e2, {}, {}, {}};
  if (name == "mirror_quintic") {
    auto p = [&](const char* text) { return parse_expr(text, alg); };
    out.D_before_substitution = Derivation(alg,
                                           {{"t1", p("t3 - t1*t2")},
                                            {"t2", p("1/625*t3^3*t4*t5*t8 - t2^2")},
                                            {"t3", p("1/625*t3^3*t5*t6*t8 - 3*t2*t3")},
                                            {"t4", p("-t2*t4 - t7")},
                                            {"t5", p("-5*t2*t5")},
                                            {"t6", p("3125*t1^3 - t2*t6 - 2*t3*t4")},
                                            {"t7", p("-625*t1*t3 - t2*t7")},
                                            {"t8", p("-5*t1^4*t3*t5*t8^2 + 10*t2*t8")}},
                                           Rational(2));
    std::map<std::string, GradedPoly> delta;
    for (std::size_t i = 0; i < alg->size(); ++i) delta.emplace(alg->name(i), GradedPoly(alg));
    delta.insert_or_assign("t2", p("1"));
    delta.insert_or_assign("t7", p("-t4"));
    out.delta_before_substitution = Derivation(alg, delta, Rational(-2));
    out.substitution = {{"t2", p("-t2")}, {"t7", p("t7 + t2*t4")}};
  }
  return out;
}

}  // namespace rcalg
