#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rcalg/extension.hpp"

namespace rcalg {

// D t1 = t1^2 + P_1 and D t_j = w_j t1 t_j + P_j, with every P free of t1.
struct RrcSystem {
  AlgebraPtr algebra;
  Derivation D;
  std::size_t t1;
  std::vector<GradedPoly> P;  // indexed like the generators; P[t1] is P_1

  const std::string& t1_name() const { return algebra->name(t1); }
};

struct RrcViolation {
  std::string generator;
  std::string reason;
};

struct RrcCertificate {
  std::optional<RrcSystem> system;
  std::vector<RrcViolation> violations;
  bool certified() const { return system.has_value(); }
};

// Checks the shape of D with `t1_name` in the distinguished role.
RrcCertificate certify_rrc(const Derivation& D, const std::string& t1_name);

// The system on M[t1] with P_1 = Lambda and P_j = d t_j.
RrcSystem from_canonical(const CanonicalData& cd, const std::string& t1_name = "t1");

// Canonical data on the subalgebra without t1: d t_j = P_j, Lambda = P_1.
// Relations of the system must not involve t1.
CanonicalData strip(const RrcSystem& system);

// Same generators (by name and weight), same relations and same images.
bool equivalent(const RrcSystem& a, const RrcSystem& b);

struct BracketDataResult {
  enum class Case { Canonical, Reciprocal };
  Case kind;
  // Case I: canonical data on M. Case II: canonical data on M[r] / (F r - 1).
  CanonicalData canonical;
  std::string reciprocal;  // name of r in case II
};

// Recovers canonical data from [F, t]_1 for every generator t and [F, F]_2,
// where F is homogeneous of weight w. Falls back to adjoining r = 1/F when
// the divisions by F and F^2 are not exact. Throws PreconditionError for
// w = 0 or w = -1, or when F vanishes modulo the relations of M.
BracketDataResult from_bracket_data(const GradedPoly& F, const std::map<std::string, GradedPoly>& bracket1,
                                    const GradedPoly& bracket2_ff, const std::string& reciprocal_name = "r");

// Built-in differential systems: "ramanujan", "ramanujan_rescaled",
// "mirror_quintic".
struct BuiltinSystem {
  AlgebraPtr algebra;
  Derivation D;
  Derivation W;
  Derivation delta;
  std::string t1;
  // mirror_quintic only: the vector field and delta before the change of
  // variables t2 -> -t2, t7 -> t7 + t2 t4, and that change of variables
  // (which is its own inverse written in either coordinate system).
  std::optional<Derivation> D_before_substitution;
  std::optional<Derivation> delta_before_substitution;
  std::map<std::string, GradedPoly> substitution;
};

BuiltinSystem builtin(const std::string& name);

}  // namespace rcalg
