#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rcalg/rational.hpp"

namespace rcalg {

enum class Exec { Serial, Parallel };

// Exponent vector over the generators of an algebra, in declared order.
// Ordered degree-lexicographically: higher total degree first, ties broken
// by the first differing exponent.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t num_vars, std::size_t index, Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::uint64_t degree() const { return degree_; }
  bool is_unit() const { return degree_ == 0; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // Requires divides(other) to hold for (*this) as the divisor.
  Monomial quotient_of(const Monomial& dividend) const;
  // This monomial with the exponent of `index` lowered by one.
  Monomial lowered(std::size_t index) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

using Term = std::pair<Monomial, Rational>;
// Sorted by decreasing monomial, no duplicates, no zero coefficients.
using TermList = std::vector<Term>;

struct Generator {
  std::string name;
  Rational weight;
};

class AlgebraSpec;
using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;
class GradedPoly;

// Weighted polynomial ring Q[x_1..x_d] with optional ideal relations.
class AlgebraSpec : public std::enable_shared_from_this<AlgebraSpec> {
 public:
  static AlgebraPtr make(unsigned grading_denominator, std::vector<Generator> generators);
  // Same generators, given relations (polynomials over `base` or a compatible algebra).
  static AlgebraPtr with_relations(const AlgebraPtr& base, const std::vector<GradedPoly>& relations);

  unsigned grading_denominator() const { return denominator_; }
  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  const std::string& name(std::size_t i) const { return generators_[i].name; }
  const Rational& weight(std::size_t i) const { return generators_[i].weight; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  // Throws ValidationError for unknown names.
  std::size_t require_index(std::string_view name) const;

  std::size_t num_relations() const { return relation_terms_.size(); }
  GradedPoly relation(std::size_t i) const;
  std::vector<GradedPoly> relations() const;

  Rational monomial_weight(const Monomial& m) const;

  // Same generator names and weights, in the same order.
  bool same_generators(const AlgebraSpec& other) const;

  AlgebraSpec(unsigned grading_denominator, std::vector<Generator> generators);

 private:
  unsigned denominator_;
  std::vector<Generator> generators_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<TermList> relation_terms_;
};

bool compatible(const AlgebraPtr& a, const AlgebraPtr& b);

// Sparse polynomial over the generators of an AlgebraSpec. Immutable value.
class GradedPoly {
 public:
  explicit GradedPoly(AlgebraPtr algebra);
  GradedPoly(AlgebraPtr algebra, TermList terms);  // normalizes

  static GradedPoly constant(AlgebraPtr algebra, const Rational& c);
  static GradedPoly generator(AlgebraPtr algebra, std::string_view name, Monomial::Exponent power = 1);
  static GradedPoly monomial(AlgebraPtr algebra, Monomial m, const Rational& c);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_unit()); }
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  // Some term carries a positive power of the generator.
  bool mentions(std::size_t generator_index) const;
  std::uint64_t max_exponent(std::size_t generator_index) const;

  // Re-expresses the polynomial over `target` by generator names. Throws
  // ValidationError if a generator used here does not exist in target.
  GradedPoly in(const AlgebraPtr& target) const;

  GradedPoly operator-() const;
  GradedPoly& operator+=(const GradedPoly& other);
  GradedPoly& operator-=(const GradedPoly& other);
  GradedPoly& operator*=(const GradedPoly& other);
  GradedPoly& operator*=(const Rational& c);

  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator*(GradedPoly a, const Rational& c) { return a *= c; }
  friend GradedPoly operator*(const Rational& c, GradedPoly a) { return a *= c; }
  // Throws PreconditionError when c is zero.
  friend GradedPoly operator/(GradedPoly a, const Rational& c);
  friend bool operator==(const GradedPoly& a, const GradedPoly& b);

  GradedPoly pow(unsigned e) const;

 private:
  AlgebraPtr algebra_;
  TermList terms_;
};

GradedPoly multiply(const GradedPoly& a, const GradedPoly& b, Exec exec = Exec::Parallel);

// Homogeneity report: the zero polynomial is homogeneous of every weight.
struct Homogeneity {
  enum class Kind { Homogeneous, Inhomogeneous, Zero };
  Kind kind;
  Rational weight;  // meaningful only for Homogeneous

  bool homogeneous() const { return kind != Kind::Inhomogeneous; }
};

Homogeneity weight_of(const GradedPoly& f);

// Weight of a nonzero homogeneous polynomial; throws InhomogeneousError
// otherwise. `context` names the caller in the message.
Rational require_weight(const GradedPoly& f, std::string_view context);

std::map<Rational, GradedPoly> homogeneous_components(const GradedPoly& f);

// Normal form modulo the algebra's relations by repeated leading-term
// replacement. Throws Error after `max_steps` replacements.
GradedPoly reduce_mod_relations(const GradedPoly& f, std::size_t max_steps = 1000000);

// Exact multivariate division. Returns nullopt when `divisor` does not divide.
std::optional<GradedPoly> divide_exact(const GradedPoly& dividend, const GradedPoly& divisor);

// Ring homomorphism sending each named generator to the given image
// (generators without an entry map to themselves in `target`).
GradedPoly substitute(const GradedPoly& f, const std::map<std::string, GradedPoly>& images,
                      const AlgebraPtr& target);

}  // namespace rcalg
