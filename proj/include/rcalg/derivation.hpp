#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rcalg/algebra.hpp"

namespace rcalg {

// A derivation stored by its generator images and extended on demand by
// linearity and the Leibniz rule.
class Derivation {
 public:
  // Generators without an entry have no image; applying the derivation to a
  // polynomial that mentions them throws MissingImageError. When `degree` is
  // given, each image must be zero or homogeneous of weight w + degree
  // (checked here; throws ValidationError).
  Derivation(AlgebraPtr algebra, const std::map<std::string, GradedPoly>& images,
             std::optional<Rational> degree = std::nullopt);

  static Derivation zero(AlgebraPtr algebra);
  // W: generator of weight w maps to w times itself.
  static Derivation weight(AlgebraPtr algebra);
  // scale * d/d(name).
  static Derivation partial(AlgebraPtr algebra, std::string_view name, const Rational& scale = 1);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::optional<Rational>& declared_degree() const { return degree_; }
  const std::optional<GradedPoly>& image(std::size_t generator_index) const { return images_[generator_index]; }
  const std::optional<GradedPoly>& image(std::string_view name) const;
  bool total() const;

  GradedPoly apply(const GradedPoly& f, Exec exec = Exec::Parallel) const;
  GradedPoly iterate(const GradedPoly& f, unsigned n) const;
  // f, d(f), ..., d^n(f).
  std::vector<GradedPoly> iterates(const GradedPoly& f, unsigned n) const;

  // Same images over a compatible algebra (or re-embedded by names).
  Derivation over(const AlgebraPtr& target) const;

  Derivation scaled(const Rational& c) const;
  friend Derivation operator+(const Derivation& a, const Derivation& b);
  friend Derivation operator-(const Derivation& a, const Derivation& b);
  friend bool operator==(const Derivation& a, const Derivation& b);

 private:
  Derivation(AlgebraPtr algebra, std::vector<std::optional<GradedPoly>> images, std::optional<Rational> degree);
  void validate_degree() const;

  AlgebraPtr algebra_;
  std::vector<std::optional<GradedPoly>> images_;
  std::optional<Rational> degree_;
};

// [a, b] = a b - b a, defined generator-wise.
Derivation commutator(const Derivation& a, const Derivation& b);

struct Sl2Check {
  std::string generator;
  std::string relation;  // "[D,delta]=W", "[W,D]=2D", "[W,delta]=-2delta"
  bool holds;
  std::string detail;  // formatted residual when the relation fails
};

struct Sl2Report {
  std::vector<Sl2Check> checks;
  bool pass() const;
};

// Checks [D,delta]=W, [W,D]=2D, [W,delta]=-2delta on every generator.
Sl2Report check_sl2_triple(const Derivation& D, const Derivation& W, const Derivation& delta);

}  // namespace rcalg
