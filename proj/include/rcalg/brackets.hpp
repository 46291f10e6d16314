#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rcalg/derivation.hpp"

namespace rcalg {

// Serre-type derivation together with the weight-4 element Lambda.
class CanonicalData {
 public:
  // `partial` must have declared degree 2 (or be certified degree 2 by its
  // images); `lambda` must be zero or homogeneous of weight 4.
  CanonicalData(Derivation partial, GradedPoly lambda);

  const Derivation& partial() const { return partial_; }
  const GradedPoly& lambda() const { return lambda_; }
  const AlgebraPtr& algebra() const { return partial_.algebra(); }

 private:
  Derivation partial_;
  GradedPoly lambda_;
};

// Coefficient (-1)^j (k+j)_{n-j} (l+n-j)_j / (j! (n-j)!) of the j-th term of
// the n-th bracket of weights k and l.
Rational bracket_coefficient(const Rational& k, const Rational& l, unsigned n, unsigned j);

// sum_j coefficient_j * left[j] * right[n-j], where left/right hold the
// iterates of f and g (at least n+1 of each).
GradedPoly bracket_sum(const Rational& k, const Rational& l, unsigned n, const std::vector<GradedPoly>& left,
                       const std::vector<GradedPoly>& right, Exec exec = Exec::Parallel);

// [f,g]_{D,n}. f and g homogeneous (zero accepted, giving zero).
GradedPoly standard_bracket(const Derivation& D, const GradedPoly& f, const GradedPoly& g, unsigned n,
                            Exec exec = Exec::Parallel);

// partial_(0) h, ..., partial_(j) h for h of weight `k`.
std::vector<GradedPoly> canonical_iterates(const CanonicalData& cd, const GradedPoly& h, const Rational& k,
                                           unsigned j);
std::vector<GradedPoly> canonical_iterates(const CanonicalData& cd, const GradedPoly& h, unsigned j);
GradedPoly canonical_iterate(const CanonicalData& cd, const GradedPoly& h, unsigned j);

// [f,g]_{partial,Lambda,n}.
GradedPoly canonical_bracket(const CanonicalData& cd, const GradedPoly& f, const GradedPoly& g, unsigned n,
                             Exec exec = Exec::Parallel);

// Inclusive j-range carrying the nonzero coefficients of the n-th bracket for
// negative integer weights l <= k < 0; nullopt when the bracket vanishes
// identically. Throws PreconditionError unless l <= k < 0.
std::optional<std::pair<unsigned, unsigned>> bracket_support_window(long k, long l, unsigned n);

}  // namespace rcalg
