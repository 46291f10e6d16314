#pragma once

#include <string>
#include <vector>

#include "rcalg/extension.hpp"

namespace rcalg {

// Power series in X with coefficients in a graded algebra, truncated after X^order.
class XSeries {
 public:
  XSeries(AlgebraPtr algebra, unsigned order);
  // Missing coefficients up to `order` are zero; extra ones are dropped.
  XSeries(AlgebraPtr algebra, unsigned order, std::vector<GradedPoly> coeffs);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const AlgebraPtr& algebra() const { return algebra_; }
  const GradedPoly& operator[](unsigned n) const { return coeffs_[n]; }
  const std::vector<GradedPoly>& coeffs() const { return coeffs_; }
  void set(unsigned n, GradedPoly c);

  // f(X) -> f(-X).
  XSeries reflected() const;

  XSeries& operator+=(const XSeries& other);
  XSeries& operator-=(const XSeries& other);
  friend XSeries operator+(XSeries a, const XSeries& b) { return a += b; }
  friend XSeries operator-(XSeries a, const XSeries& b) { return a -= b; }
  // Truncated at the smaller of the two orders.
  friend XSeries operator*(const XSeries& a, const XSeries& b);
  friend bool operator==(const XSeries& a, const XSeries& b);

 private:
  AlgebraPtr algebra_;
  std::vector<GradedPoly> coeffs_;
};

enum class CkKind { DPower, CanonicalIterate };

// Cohen-Kuznetsov series split at the non-positive integer weights. For
// other weights `minus` is zero and `plus` carries the whole series with
// coefficients d^n f / (n! (k)_n).
struct CKPair {
  XSeries minus;
  XSeries plus;
  XSeries total() const { return minus + plus; }
};

// CK series of a homogeneous f of M[E2] (E2 itself allowed), using D^n or
// the canonical iterates of the prolonged Serre-type derivation.
CKPair ck_series(CkKind kind, const Extension& ext, const GradedPoly& f, unsigned order);

// sum_j (sign*g)^j / j! X^j.
XSeries exp_series(const GradedPoly& g, unsigned order, int sign);

// (-1)^n sum_{j=0}^{-k} (-k-j)! / (j! (n-j)!) E2^(n-j) D^j f, for f in M of
// weight k <= 0 and n >= -k+1.
GradedPoly a_n_term(const Extension& ext, const GradedPoly& f, unsigned n);

struct SeriesCheck {
  std::string name;
  bool holds;
  std::string detail;
};

// Twisting D-series by exp(-E2 X) yields the canonical series.
std::vector<SeriesCheck> verify_ck_twist(const Extension& ext, const GradedPoly& f, unsigned order);

// Products CK(f;-X) CK(g;X) against the brackets of f and g, for both kinds
// of series, in every weight regime that applies to (k, l).
std::vector<SeriesCheck> verify_ck_products(const Extension& ext, const GradedPoly& f, const GradedPoly& g,
                                            unsigned order);

}  // namespace rcalg
