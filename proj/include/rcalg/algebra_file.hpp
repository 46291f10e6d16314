#pragma once

// JSON algebra definitions:
//
//   {
//     "grading_denominator": 1,
//     "generators": [{"name": "E4", "weight": "4"}, ...],
//     "derivation": {"E4": "-1/3*E6", ...},
//     "lambda": "-1/144*E4",          (optional)
//     "e2": "e2",                     (optional)
//     "relations": ["..."],           (optional)
//     "delta": {"e2": "-1"}           (optional)
//   }
//
// With "lambda", the derivation is the Serre-type derivation of a canonical
// algebra and "e2" names the generator adjoined for the extension (default
// "E2"). Without it, the derivation is D itself and "e2", when given, names
// the existing generator in the t1 role.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rcalg/extension.hpp"

namespace rcalg {

struct AlgebraDefinition {
  unsigned grading_denominator = 1;
  std::vector<std::pair<std::string, std::string>> generators;  // name, weight
  std::vector<std::pair<std::string, std::string>> derivation;  // generator, image
  std::optional<std::string> lambda;
  std::optional<std::string> e2;
  std::vector<std::string> relations;
  std::vector<std::pair<std::string, std::string>> delta;

  friend bool operator==(const AlgebraDefinition&, const AlgebraDefinition&) = default;
};

// Throws ValidationError on schema violations.
AlgebraDefinition definition_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json definition_to_json(const AlgebraDefinition& def);

// Built-in names: classical, negweights, fracweights, ramanujan,
// ramanujan_rescaled, mirror_quintic.
const std::vector<std::string>& builtin_names();
std::optional<AlgebraDefinition> builtin_definition(const std::string& name);

// Coefficient c of the classical Lambda = c * E4.
Rational classical_lambda_coefficient();

struct LoadedAlgebra {
  AlgebraDefinition definition;
  // The algebra D acts on; for definitions with "lambda" this is M[E2].
  AlgebraPtr algebra;
  Derivation D;
  std::optional<Derivation> delta;
  std::optional<std::string> e2;
  // Present when canonical data is known (given directly, or recovered from
  // a system of the Ramanujan-Rankin-Cohen shape).
  std::optional<Extension> extension;
};

// Parses expressions and validates weights, degrees and names. Throws
// ValidationError (ParseError for malformed expressions).
LoadedAlgebra load(const AlgebraDefinition& def);

// A built-in name or a path to a JSON file.
LoadedAlgebra load_algebra(const std::string& name_or_path);

// Definition of the loaded algebra with expressions in formatted form.
// Exporting a loaded export reproduces it exactly.
AlgebraDefinition export_definition(const LoadedAlgebra& loaded);

}  // namespace rcalg
