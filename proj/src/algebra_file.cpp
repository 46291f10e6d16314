#include "rcalg/algebra_file.hpp"

#include <fstream>
#include <set>

#include "rcalg/errors.hpp"
#include "rcalg/expr.hpp"
#include "rcalg/rrc.hpp"

namespace rcalg {
namespace {

using json = nlohmann::ordered_json;

const std::set<std::string> kKeys = {"grading_denominator", "generators", "derivation", "lambda",
                                     "e2",                  "relations",  "delta"};

std::string string_field(const json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ValidationError(what + " must be a string");
}

std::vector<std::pair<std::string, std::string>> string_map(const json& j, const std::string& what) {
  if (!j.is_object()) throw ValidationError("'" + what + "' must be an object of expression strings");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [k, v] : j.items()) out.emplace_back(k, string_field(v, "'" + what + "." + k + "'"));
  return out;
}

json string_object(const std::vector<std::pair<std::string, std::string>>& entries) {
  json o = json::object();
  for (const auto& [k, v] : entries) o[k] = v;
  return o;
}

std::map<std::string, GradedPoly> parse_images(const std::vector<std::pair<std::string, std::string>>& entries,
                                               const AlgebraPtr& alg, const std::string& what) {
  std::map<std::string, GradedPoly> out;
  for (const auto& [name, text] : entries) {
    if (!alg->index_of(name)) throw ValidationError(what + " names unknown generator '" + name + "'");
    try {
      out.insert_or_assign(name, parse_expr(text, alg));
    } catch (const ParseError& e) {
      throw ValidationError("in " + what + " of '" + name + "': " + e.what());
    }
  }
  return out;
}

// Generators missing from the map are sent to zero.
Derivation parse_delta(const std::vector<std::pair<std::string, std::string>>& entries, const AlgebraPtr& alg) {
  std::map<std::string, GradedPoly> d = parse_images(entries, alg, "delta");
  for (std::size_t i = 0; i < alg->size(); ++i) d.emplace(alg->name(i), GradedPoly(alg));
  return Derivation(alg, d, Rational(-2));
}

}  // namespace

AlgebraDefinition definition_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("algebra definition must be a JSON object");
  for (const auto& [k, v] : j.items()) {
    if (!kKeys.count(k)) throw ValidationError("unknown key '" + k + "' in algebra definition");
  }
  AlgebraDefinition def;
  if (j.contains("grading_denominator")) {
    const auto& g = j.at("grading_denominator");
    if (!g.is_number_integer() || g.get<long long>() <= 0) {
      throw ValidationError("'grading_denominator' must be a positive integer");
    }
    def.grading_denominator = static_cast<unsigned>(g.get<long long>());
  }
  if (!j.contains("generators") || !j.at("generators").is_array()) {
    throw ValidationError("'generators' must be a list of {name, weight}");
  }
  for (const auto& g : j.at("generators")) {
    if (!g.is_object() || !g.contains("name") || !g.contains("weight") || g.size() != 2) {
      throw ValidationError("each generator must be an object with exactly 'name' and 'weight'");
    }
    def.generators.emplace_back(string_field(g.at("name"), "generator name"),
                                string_field(g.at("weight"), "generator weight"));
  }
  if (!j.contains("derivation")) throw ValidationError("missing 'derivation'");
  def.derivation = string_map(j.at("derivation"), "derivation");
  if (j.contains("lambda")) def.lambda = string_field(j.at("lambda"), "'lambda'");
  if (j.contains("e2")) def.e2 = string_field(j.at("e2"), "'e2'");
  if (j.contains("relations")) {
    if (!j.at("relations").is_array()) throw ValidationError("'relations' must be a list of expressions");
    for (const auto& r : j.at("relations")) def.relations.push_back(string_field(r, "relation"));
  }
  if (j.contains("delta")) def.delta = string_map(j.at("delta"), "delta");
  return def;
}

json definition_to_json(const AlgebraDefinition& def) {
  json j;
  j["grading_denominator"] = def.grading_denominator;
  json gens = json::array();
  for (const auto& [name, weight] : def.generators) gens.push_back({{"name", name}, {"weight", weight}});
  j["generators"] = gens;
  j["derivation"] = string_object(def.derivation);
  if (def.lambda) j["lambda"] = *def.lambda;
  if (def.e2) j["e2"] = *def.e2;
  if (!def.relations.empty()) j["relations"] = def.relations;
  if (!def.delta.empty()) j["delta"] = string_object(def.delta);
  return j;
}

Rational classical_lambda_coefficient() { return Rational(-1, 144); }

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"classical",          "negweights", "fracweights", "ramanujan",
                                                 "ramanujan_rescaled", "mirror_quintic"};
  return names;
}

std::optional<AlgebraDefinition> builtin_definition(const std::string& name) {
  AlgebraDefinition d;
  if (name == "classical") {
    d.generators = {{"E4", "4"}, {"E6", "6"}};
    d.derivation = {{"E4", "-1/3*E6"}, {"E6", "-1/2*E4^2"}};
    d.lambda = to_string(classical_lambda_coefficient()) + "*E4";
    d.e2 = "e2";
  } else if (name == "negweights") {
    // u is an auxiliary generator of weight 1: without a positive weight the
    // only degree-2 derivations of Q[a,b,c] are trivial.
    d.generators = {{"a", "-1"}, {"b", "-2"}, {"c", "-3"}, {"u", "1"}};
    d.derivation = {{"a", "u + a*u^2 + b*u^3"},
                    {"b", "2 + a*u + c*u^3"},
                    {"c", "a + b*u + a*b*u^2"},
                    {"u", "u^3 + a*u^4"}};
    d.lambda = "u^4 + 1/2*b*u^6 - a*c*u^8";
    d.e2 = "E2";
  } else if (name == "fracweights") {
    d.grading_denominator = 2;
    d.generators = {{"h", "1/2"}, {"g", "5/2"}};
    d.derivation = {{"h", "g + h^5"}, {"g", "1/2*h^4*g - h^9"}};
    d.lambda = "h^3*g - 1/3*h^8";
    d.e2 = "E2";
  } else if (name == "ramanujan") {
    d.generators = {{"t1", "2"}, {"t2", "4"}, {"t3", "6"}};
    d.derivation = {{"t1", "1/12*(t1^2 - t2)"}, {"t2", "1/3*(t1*t2 - t3)"}, {"t3", "1/2*(t1*t3 - t2^2)"}};
    d.e2 = "t1";
    d.delta = {{"t1", "-12"}};
  } else if (name == "ramanujan_rescaled") {
    d.generators = {{"t1", "2"}, {"t2", "4"}, {"t3", "6"}};
    d.derivation = {{"t1", "t1^2 - 1/144*t2"}, {"t2", "4*t1*t2 - 1/3*t3"}, {"t3", "6*t1*t3 - 1/2*t2^2"}};
    d.e2 = "t1";
    d.delta = {{"t1", "-1"}};
  } else if (name == "mirror_quintic") {
    d.generators = {{"t1", "1"}, {"t2", "2"}, {"t3", "3"}, {"t4", "0"},
                    {"t5", "5"}, {"t6", "1"}, {"t7", "2"}, {"t8", "-10"}};
    d.derivation = {{"t1", "t1*t2 + t3"},
                    {"t2", "t2^2 - 1/625*t3^3*t4*t5*t8"},
                    {"t3", "3*t2*t3 + 1/625*t3^3*t5*t6*t8"},
                    {"t4", "-t7"},
                    {"t5", "5*t2*t5"},
                    {"t6", "t2*t6 + 3125*t1^3 - 2*t3*t4"},
                    {"t7", "2*t2*t7 - 625*t1*t3 + 1/625*t3^3*t4^2*t5*t8"},
                    {"t8", "-10*t2*t8 - 5*t1^4*t3*t5*t8^2"}};
    d.relations = {"t8*t5*(t1^5 - t5) - 1"};
    d.e2 = "t2";
    d.delta = {{"t2", "-1"}};
  } else {
    return std::nullopt;
  }
  return d;
}

LoadedAlgebra load(const AlgebraDefinition& def) {
  if (def.grading_denominator == 0) throw ValidationError("grading denominator must be positive");
  std::vector<Generator> gens;
  for (const auto& [name, weight] : def.generators) gens.push_back({name, parse_rational(weight)});
  AlgebraPtr alg = AlgebraSpec::make(def.grading_denominator, gens);
  if (!def.relations.empty()) {
    std::vector<GradedPoly> rels;
    for (const auto& r : def.relations) rels.push_back(parse_expr(r, alg));
    alg = AlgebraSpec::with_relations(alg, rels);
  }
  const auto images = parse_images(def.derivation, alg, "derivation");
  for (std::size_t i = 0; i < alg->size(); ++i) {
    if (!images.count(alg->name(i))) throw ValidationError("derivation has no image for '" + alg->name(i) + "'");
  }
  Derivation given(alg, images, Rational(2));

  if (def.lambda) {
    CanonicalData cd(given, parse_expr(*def.lambda, alg));
    Extension ext = Extension::build(cd, def.e2.value_or("E2"));
    std::optional<Derivation> delta;
    if (def.delta.empty()) {
      delta = Derivation::partial(ext.extended(), ext.e2_name(), Rational(-1));
    } else {
      delta = parse_delta(def.delta, ext.extended());
    }
    return LoadedAlgebra{def, ext.extended(), ext.D(), delta, ext.e2_name(), ext};
  }

  LoadedAlgebra out{def, alg, given, std::nullopt, def.e2, std::nullopt};
  if (!def.delta.empty()) out.delta = parse_delta(def.delta, alg);
  if (def.e2) {
    if (!alg->index_of(*def.e2)) throw ValidationError("'e2' names unknown generator '" + *def.e2 + "'");
    const RrcCertificate cert = certify_rrc(given, *def.e2);
    if (cert.certified()) out.extension = Extension::build(strip(*cert.system), *def.e2);
  }
  return out;
}

LoadedAlgebra load_algebra(const std::string& name_or_path) {
  if (auto def = builtin_definition(name_or_path)) return load(*def);
  std::ifstream in(name_or_path);
  if (!in) throw ValidationError("'" + name_or_path + "' is neither a built-in algebra nor a readable file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("invalid JSON in '" + name_or_path + "': " + e.what());
  }
  return load(definition_from_json(j));
}

AlgebraDefinition export_definition(const LoadedAlgebra& loaded) {
  AlgebraDefinition out;
  const bool canonical = loaded.definition.lambda.has_value();
  const AlgebraPtr base = canonical ? loaded.extension->base() : loaded.algebra;
  out.grading_denominator = base->grading_denominator();
  for (const auto& g : base->generators()) out.generators.emplace_back(g.name, to_string(g.weight));
  const Derivation& d = canonical ? loaded.extension->canonical().partial() : loaded.D;
  for (std::size_t i = 0; i < base->size(); ++i) out.derivation.emplace_back(base->name(i), format(*d.image(i)));
  if (canonical) out.lambda = format(loaded.extension->canonical().lambda());
  out.e2 = loaded.e2;
  for (const auto& r : base->relations()) out.relations.push_back(format(r));
  if (!loaded.definition.delta.empty() && loaded.delta) {
    const AlgebraPtr& alg = loaded.delta->algebra();
    for (std::size_t i = 0; i < alg->size(); ++i) {
      const GradedPoly& img = *loaded.delta->image(i);
      if (!img.is_zero()) out.delta.emplace_back(alg->name(i), format(img));
    }
  }
  return out;
}

}  // namespace rcalg
