#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "rcalg/brackets.hpp"

namespace rcalg {

// The polynomial extension M[E2] of a canonical RC algebra M, carrying the
// degree-2 derivation D(f) = d(f) + k*E2*f, D(E2) = Lambda + E2^2.
class Extension {
 public:
  // Throws ValidationError when `e2_name` collides with a generator of M.
  static Extension build(const CanonicalData& cd, const std::string& e2_name = "E2");

  const AlgebraPtr& base() const { return base_->algebra(); }
  const CanonicalData& canonical() const { return *base_; }
  const AlgebraPtr& extended() const { return extended_; }
  const std::string& e2_name() const { return e2_name_; }
  std::size_t e2_index() const { return e2_index_; }
  GradedPoly e2() const { return GradedPoly::generator(extended_, e2_name_); }
  const Derivation& D() const { return D_; }
  // The Serre-type derivation prolonged to M[E2] by d(E2) = Lambda - E2^2,
  // with Lambda viewed in M[E2].
  const CanonicalData& extended_canonical() const { return *extended_cd_; }

  GradedPoly lift(const GradedPoly& f) const { return f.in(extended_); }
  bool in_base(const GradedPoly& f) const;
  // Throws PreconditionError if f involves E2.
  GradedPoly lower(const GradedPoly& f) const;

  // Psi_n, an element of M of weight 2n+2. Memoized; safe to call concurrently.
  GradedPoly psi(unsigned n) const;

 private:
  struct PsiCache {
    std::mutex mutex;
    std::vector<GradedPoly> values;
  };

  std::shared_ptr<const CanonicalData> base_;
  AlgebraPtr extended_;
  std::string e2_name_;
  std::size_t e2_index_ = 0;
  Derivation D_;
  std::shared_ptr<const CanonicalData> extended_cd_;
  std::shared_ptr<PsiCache> psi_cache_;

  Extension(std::shared_ptr<const CanonicalData> base, AlgebraPtr extended, std::string e2_name,
            std::size_t e2_index, Derivation D, std::shared_ptr<const CanonicalData> extended_cd);
};

// f = sum_i c_i E2^i with c_i in M; only nonzero c_i are listed.
std::map<unsigned, GradedPoly> e2_profile(const GradedPoly& f, const Extension& ext);

struct BracketComparison {
  unsigned n;
  bool equal;
  GradedPoly difference;  // canonical minus standard, in M[E2]
};

// Canonical bracket over M against the standard bracket of D, for n <= n_max.
std::vector<BracketComparison> verify_bracket_equality(const Extension& ext, const GradedPoly& f,
                                                       const GradedPoly& g, unsigned n_max,
                                                       Exec exec = Exec::Parallel);

// sum_j (-1)^(n-j) n! (k+j)_(n-j) / ((n-j)! j!) E2^(n-j) D^j h, where h is
// homogeneous of weight k in M[E2].
GradedPoly e2_expansion(const Extension& ext, const GradedPoly& h, unsigned n);

// The same expansion written with factorials, in the branch selected by k
// and n: integral factorial ratios when k is a non-positive integer.
GradedPoly e2_expansion_by_cases(const Extension& ext, const GradedPoly& f, unsigned n);

// D^(n+1) E2 computed by iteration. Throws Error if it disagrees with
// d_power_e2_closed_form.
GradedPoly d_power_e2(const Extension& ext, unsigned n);
GradedPoly d_power_e2_closed_form(const Extension& ext, unsigned n);

// sum_{j=0}^{n+1} (-1)^j (n+1)!(n+2)! / ((j+1)!(n+1-j)!).
Integer d_power_binomial_sum(unsigned n);

// theta^(n) f = D^(n+1) f - (n+k)[E2, f]_n for f in M of weight k. Returned
// in M[E2]; the result has E2-profile concentrated in degree 0.
GradedPoly kk_theta_f(const Extension& ext, const GradedPoly& f, unsigned n, Exec exec = Exec::Parallel);
// Expression of theta^(n) f through Psi_j and the canonical iterates of f.
GradedPoly kk_theta_f_closed_form(const Extension& ext, const GradedPoly& f, unsigned n);

// theta^(n) E2 = (1 + (-1)^n) D^(n+1) E2 - (n+2)[E2, E2]_n.
GradedPoly kk_theta_e2(const Extension& ext, unsigned n, Exec exec = Exec::Parallel);
// Closed form through Psi_j; valid for even n (odd n gives zero directly).
GradedPoly kk_theta_e2_closed_form(const Extension& ext, unsigned n);

}  // namespace rcalg
