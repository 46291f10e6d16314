#include "rcalg/ck_series.hpp"

#include <algorithm>

#include "rcalg/errors.hpp"
#include "rcalg/expr.hpp"

namespace rcalg {

XSeries::XSeries(AlgebraPtr algebra, unsigned order)
    : algebra_(std::move(algebra)), coeffs_(order + 1, GradedPoly(algebra_)) {}

XSeries::XSeries(AlgebraPtr algebra, unsigned order, std::vector<GradedPoly> coeffs) : XSeries(std::move(algebra), order) {
  for (unsigned n = 0; n <= order && n < coeffs.size(); ++n) coeffs_[n] = coeffs[n].in(algebra_);
}

void XSeries::set(unsigned n, GradedPoly c) {
  if (n > order()) throw PreconditionError("XSeries::set beyond truncation order");
  coeffs_[n] = c.in(algebra_);
}

XSeries XSeries::reflected() const {
  XSeries out = *this;
  for (unsigned n = 1; n <= order(); n += 2) out.coeffs_[n] = -out.coeffs_[n];
  return out;
}

XSeries& XSeries::operator+=(const XSeries& other) {
  const unsigned ord = std::min(order(), other.order());
  coeffs_.resize(ord + 1, GradedPoly(algebra_));
  for (unsigned n = 0; n <= ord; ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

XSeries& XSeries::operator-=(const XSeries& other) {
  const unsigned ord = std::min(order(), other.order());
  coeffs_.resize(ord + 1, GradedPoly(algebra_));
  for (unsigned n = 0; n <= ord; ++n) coeffs_[n] -= other.coeffs_[n];
  return *this;
}

XSeries operator*(const XSeries& a, const XSeries& b) {
  const unsigned ord = std::min(a.order(), b.order());
  XSeries out(a.algebra_, ord);
  for (unsigned i = 0; i <= ord; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= ord; ++j) {
      if (!b.coeffs_[j].is_zero()) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

bool operator==(const XSeries& a, const XSeries& b) {
  if (a.order() != b.order()) return false;
  for (unsigned n = 0; n <= a.order(); ++n) {
    if (!(a.coeffs_[n] == b.coeffs_[n])) return false;
  }
  return true;
}

namespace {

std::vector<GradedPoly> series_iterates(CkKind kind, const Extension& ext, const GradedPoly& fx, const Rational& k,
                                        unsigned order) {
  if (kind == CkKind::DPower) return ext.D().iterates(fx, order);
  return canonical_iterates(ext.extended_canonical(), fx, k, order);
}

CKPair ck_from_iterates(const AlgebraPtr& alg, const Rational& k, const std::vector<GradedPoly>& d, unsigned order) {
  CKPair out{XSeries(alg, order), XSeries(alg, order)};
  if (!is_nonpositive_integer(k)) {
    for (unsigned n = 0; n <= order; ++n) {
      out.plus.set(n, d[n] / (Rational(factorial(n)) * pochhammer(k, n)));
    }
    return out;
  }
  const long m = -to_long(k);
  for (unsigned n = 0; n <= order; ++n) {
    const long nn = static_cast<long>(n);
    if (nn <= m) {
      Rational c = Rational(factorial(m - nn)) / Rational(factorial(n));
      out.minus.set(n, d[n] * (n % 2 == 0 ? c : Rational(-c)));
    } else {
      out.plus.set(n, d[n] / Rational(factorial(n) * factorial(nn - m - 1)));
    }
  }
  return out;
}

std::string failing_indices(const std::vector<unsigned>& bad) {
  if (bad.empty()) return {};
  std::string s = "mismatch at n =";
  for (unsigned n : bad) s += " " + std::to_string(n);
  return s;
}

}  // namespace

CKPair ck_series(CkKind kind, const Extension& ext, const GradedPoly& f, unsigned order) {
  const GradedPoly fx = ext.lift(f);
  if (fx.is_zero()) return {XSeries(ext.extended(), order), XSeries(ext.extended(), order)};
  const Rational k = require_weight(fx, "ck_series");
  return ck_from_iterates(ext.extended(), k, series_iterates(kind, ext, fx, k, order), order);
}

XSeries exp_series(const GradedPoly& g, unsigned order, int sign) {
  XSeries out(g.algebra(), order);
  const GradedPoly base = sign < 0 ? -g : g;
  GradedPoly power = GradedPoly::constant(g.algebra(), 1);
  for (unsigned j = 0; j <= order; ++j) {
    out.set(j, power / Rational(factorial(j)));
    power = power * base;
  }
  return out;
}

GradedPoly a_n_term(const Extension& ext, const GradedPoly& f, unsigned n) {
  const GradedPoly fx = ext.lift(f);
  if (fx.is_zero()) return fx;
  const Rational k = require_weight(fx, "a_n_term");
  if (!is_nonpositive_integer(k)) throw PreconditionError("a_n_term needs a non-positive integer weight");
  const long m = -to_long(k);
  if (static_cast<long>(n) < m + 1) throw PreconditionError("a_n_term needs n >= -k+1");
  const auto d = ext.D().iterates(fx, static_cast<unsigned>(m));
  const GradedPoly E2 = ext.e2();
  GradedPoly sum(ext.extended());
  for (long j = 0; j <= m; ++j) {
    Rational c = Rational(factorial(m - j)) / Rational(factorial(j) * factorial(n - j));
    sum += E2.pow(n - static_cast<unsigned>(j)) * d[j] * c;
  }
  return n % 2 == 0 ? sum : -sum;
}

std::vector<SeriesCheck> verify_ck_twist(const Extension& ext, const GradedPoly& f, unsigned order) {
  const GradedPoly fx = ext.lift(f);
  std::vector<SeriesCheck> out;
  if (fx.is_zero()) return out;
  const Rational k = require_weight(fx, "verify_ck_twist");
  const CKPair d = ck_series(CkKind::DPower, ext, fx, order);
  const CKPair c = ck_series(CkKind::CanonicalIterate, ext, fx, order);
  const XSeries twist = exp_series(ext.e2(), order, -1);
  auto compare = [&](const std::string& name, const XSeries& lhs, const XSeries& rhs) {
    std::vector<unsigned> bad;
    for (unsigned n = 0; n <= order; ++n) {
      if (!(lhs[n] == rhs[n])) bad.push_back(n);
    }
    out.push_back({name, bad.empty(), failing_indices(bad)});
  };
  if (!is_nonpositive_integer(k)) {
    compare("exp(-E2 X) CK_D = CK_partial", twist * d.plus, c.plus);
    return out;
  }
  const long m = -to_long(k);
  XSeries a_terms(ext.extended(), order);
  for (unsigned n = static_cast<unsigned>(m + 1); n <= order; ++n) a_terms.set(n, a_n_term(ext, fx, n));
  compare("exp(-E2 X) CK_D^- = CK_partial^- + sum A_n X^n", twist * d.minus, c.minus + a_terms);
  compare("exp(-E2 X) CK_D^+ = CK_partial^+", twist * d.plus, c.plus);
  return out;
}

std::vector<SeriesCheck> verify_ck_products(const Extension& ext, const GradedPoly& f, const GradedPoly& g,
                                            unsigned order) {
  GradedPoly fx = ext.lift(f), gx = ext.lift(g);
  std::vector<SeriesCheck> out;
  if (fx.is_zero() || gx.is_zero()) return out;
  Rational k = require_weight(fx, "verify_ck_products");
  Rational l = require_weight(gx, "verify_ck_products");
  const bool negative = is_nonpositive_integer(k) && is_nonpositive_integer(l) && sgn(k) < 0 && sgn(l) < 0;
  const bool generic = !is_nonpositive_integer(k) && !is_nonpositive_integer(l);
  if (!negative && !generic) return out;
  if (negative && l > k) {
    std::swap(fx, gx);
    std::swap(k, l);
  }

  for (CkKind kind : {CkKind::DPower, CkKind::CanonicalIterate}) {
    const std::string tag = kind == CkKind::DPower ? "D" : "partial";
    const auto df = series_iterates(kind, ext, fx, k, order);
    const auto dg = series_iterates(kind, ext, gx, l, order);
    const CKPair cf = ck_from_iterates(ext.extended(), k, df, order);
    const CKPair cg = ck_from_iterates(ext.extended(), l, dg, order);
    auto bracket = [&](unsigned n) { return bracket_sum(k, l, n, df, dg); };
    auto check = [&](const std::string& name, unsigned lo, long hi, const XSeries* product, auto scale) {
      if (static_cast<long>(lo) > std::min<long>(hi, order)) return;
      std::vector<unsigned> bad;
      for (long n = lo; n <= std::min<long>(hi, order); ++n) {
        const unsigned un = static_cast<unsigned>(n);
        const GradedPoly expected = bracket(un) * scale(un);
        const GradedPoly actual = product ? (*product)[un] : GradedPoly(ext.extended());
        if (!(expected == actual)) bad.push_back(un);
      }
      out.push_back({"CK_" + tag + " " + name, bad.empty(), failing_indices(bad)});
    };

    if (generic) {
      const XSeries p = cf.plus.reflected() * cg.plus;
      check("product (generic weights)", 0, order, &p,
            [&](unsigned n) -> Rational { return Rational(1) / (pochhammer(k, n) * pochhammer(l, n)); });
      continue;
    }
    const long mk = -to_long(k), ml = -to_long(l);
    const XSeries p1 = cf.minus.reflected() * cg.minus;
    check("case 1 product", 0, mk, &p1, [&](unsigned n) -> Rational {
      return Rational(factorial(mk - n) * factorial(ml - n));
    });
    const XSeries p2 = cf.plus.reflected() * cg.minus;
    check("case 2 product", static_cast<unsigned>(mk + 1), ml, &p2, [&](unsigned n) -> Rational {
      Rational c = Rational(factorial(ml - n)) / Rational(factorial(n - mk - 1));
      return n % 2 == 0 ? c : Rational(-c);
    });
    check("case 3 vanishing", static_cast<unsigned>(ml + 1), mk + ml + 1, nullptr,
          [&](unsigned) -> Rational { return Rational(1); });
    const XSeries p4 = cf.plus.reflected() * cg.plus;
    check("case 4 product", static_cast<unsigned>(mk + ml + 2), order, &p4, [&](unsigned n) -> Rational {
      return Rational(1) / Rational(factorial(n - mk - 1) * factorial(n - ml - 1));
    });
  }
  return out;
}

}  // namespace rcalg
