#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rcalg/algebra.hpp"
#include "rcalg/derivation.hpp"

namespace rcalg {

// Truncated q-expansion sum_{n <= order} a_n q^n with exact coefficients.
class QSeries {
 public:
  explicit QSeries(unsigned order);
  explicit QSeries(std::vector<Rational> coeffs);  // order = size - 1; must be nonempty
  static QSeries constant(const Rational& c, unsigned order);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const Rational& operator[](unsigned n) const { return coeffs_[n]; }
  Rational& operator[](unsigned n) { return coeffs_[n]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  // q d/dq.
  QSeries theta() const;
  QSeries pow(unsigned e) const;

  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const Rational& c);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries& a, const QSeries& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

// Truncated product, parallel over output coefficients when exec allows.
QSeries multiply(const QSeries& a, const QSeries& b, Exec exec);

// Divisor power sum sum_{d | n} d^k.
Integer sigma(unsigned k, unsigned long n);

// E2, E4, E6 with constant term 1. Throws PreconditionError for other weights.
QSeries eisenstein(unsigned weight, unsigned order);

// q prod_{n>=1} (1 - q^n)^24.
QSeries delta_product(unsigned order);

using Assignment = std::map<std::string, QSeries>;

// E4, E6 and `e2_name` -> E2/12, all to the given order.
Assignment classical_assignment(unsigned order, const std::string& e2_name = "e2");

// Ring homomorphism from polynomials to q-series. Throws PreconditionError
// for unassigned generators and ValidationError for mixed orders.
QSeries evaluate(const GradedPoly& f, const Assignment& assignment, Exec exec = Exec::Parallel);

struct QCheck {
  std::string name;
  bool holds;
  std::string detail;
};

// Residuals of the Ramanujan differential system for (E2, E4, E6). The
// series may be overridden to test that a perturbation is detected.
std::vector<QCheck> check_ramanujan(unsigned order, const std::optional<QSeries>& e2 = std::nullopt,
                                    const std::optional<QSeries>& e4 = std::nullopt,
                                    const std::optional<QSeries>& e6 = std::nullopt);

struct BasisMatch {
  bool in_span = false;
  // E4^a E6^b with 4a + 6b = weight, in order of decreasing a.
  std::vector<std::pair<unsigned, unsigned>> monomials;
  std::vector<Rational> coefficients;  // filled when in_span
};

// Exact membership of s in the span of the weight-`weight` monomials in E4,
// E6, matching coefficients 0..order. Throws PreconditionError when
// order + 1 < dimension + 2.
BasisMatch express_in_basis(const QSeries& s, int weight, unsigned order);

// Rankin-Cohen bracket of q-series of weights k and l, with q d/dq as the
// derivation.
QSeries q_bracket(const QSeries& f, const Rational& k, const QSeries& g, const Rational& l, unsigned n);

// Among `candidates`, the coefficients c for which the canonical brackets of
// (partial, c*E4) over Q[E4, E6] agree with the q-series brackets of the
// Eisenstein series, for all generator pairs and n <= n_max.
std::vector<Rational> calibrate_lambda(const Derivation& partial, const std::vector<Rational>& candidates,
                                       unsigned order, unsigned n_max);

}  // namespace rcalg
