#include "rcalg/qseries.hpp"

#include <algorithm>

#include "rcalg/brackets.hpp"
#include "rcalg/errors.hpp"
#include "rcalg/kernels.hpp"

namespace rcalg {

QSeries::QSeries(unsigned order) : coeffs_(order + 1) {}

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ValidationError("a q-series needs at least one coefficient");
}

QSeries QSeries::constant(const Rational& c, unsigned order) {
  QSeries s(order);
  s[0] = c;
  return s;
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

QSeries QSeries::theta() const {
  QSeries out(order());
  for (unsigned n = 1; n <= order(); ++n) out[n] = coeffs_[n] * n;
  return out;
}

QSeries QSeries::pow(unsigned e) const {
  QSeries result = constant(1, order());
  QSeries base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

namespace {

void require_same_order(const QSeries& a, const QSeries& b) {
  if (a.order() != b.order()) throw ValidationError("q-series have different truncation orders");
}

}  // namespace

QSeries& QSeries::operator+=(const QSeries& other) {
  require_same_order(*this, other);
  for (unsigned n = 0; n <= order(); ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
  require_same_order(*this, other);
  for (unsigned n = 0; n <= order(); ++n) coeffs_[n] -= other.coeffs_[n];
  return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QSeries multiply(const QSeries& a, const QSeries& b, Exec exec) {
  require_same_order(a, b);
  return QSeries(kernels::convolve(a.coeffs(), b.coeffs(), a.order() + 1, exec));
}

QSeries operator*(const QSeries& a, const QSeries& b) { return multiply(a, b, Exec::Parallel); }

Integer sigma(unsigned k, unsigned long n) {
  Integer sum = 0;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), d, k);
    sum += p;
    const unsigned long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(p.get_mpz_t(), e, k);
      sum += p;
    }
  }
  return sum;
}

QSeries eisenstein(unsigned weight, unsigned order) {
  long scale;
  switch (weight) {
    case 2: scale = -24; break;
    case 4: scale = 240; break;
    case 6: scale = -504; break;
    default: throw PreconditionError("Eisenstein series available for weights 2, 4, 6 only");
  }
  QSeries s(order);
  s[0] = 1;
  for (unsigned n = 1; n <= order; ++n) s[n] = Rational(sigma(weight - 1, n) * scale);
  return s;
}

QSeries delta_product(unsigned order) {
  QSeries p = QSeries::constant(1, order);
  for (unsigned n = 1; n <= order; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      // multiply in place by (1 - q^n), highest index first
      for (unsigned i = order; i >= n; --i) p[i] -= p[i - n];
    }
  }
  QSeries out(order);
  for (unsigned i = 1; i <= order; ++i) out[i] = p[i - 1];
  return out;
}

Assignment classical_assignment(unsigned order, const std::string& e2_name) {
  Assignment a;
  a.emplace("E4", eisenstein(4, order));
  a.emplace("E6", eisenstein(6, order));
  a.emplace(e2_name, eisenstein(2, order) * Rational(1, 12));
  return a;
}

QSeries evaluate(const GradedPoly& f, const Assignment& assignment, Exec exec) {
  if (assignment.empty()) throw PreconditionError("empty assignment");
  const unsigned order = assignment.begin()->second.order();
  for (const auto& [name, s] : assignment) {
    if (s.order() != order) throw ValidationError("assignment series have different truncation orders");
  }
  const AlgebraSpec& alg = *f.algebra();
  std::vector<const QSeries*> gen(alg.size(), nullptr);
  std::vector<std::vector<QSeries>> powers(alg.size());
  for (std::size_t i = 0; i < alg.size(); ++i) {
    if (!f.mentions(i)) continue;
    auto it = assignment.find(alg.name(i));
    if (it == assignment.end()) throw PreconditionError("no q-series assigned to '" + alg.name(i) + "'");
    gen[i] = &it->second;
    powers[i].push_back(QSeries::constant(1, order));
    const auto top = f.max_exponent(i);
    for (std::uint64_t e = 1; e <= top; ++e) powers[i].push_back(multiply(powers[i].back(), it->second, exec));
  }
  QSeries sum(order);
  for (const auto& [m, c] : f.terms()) {
    QSeries term = QSeries::constant(c, order);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) term = multiply(term, powers[i][m[i]], exec);
    }
    sum += term;
  }
  return sum;
}

std::vector<QCheck> check_ramanujan(unsigned order, const std::optional<QSeries>& e2,
                                    const std::optional<QSeries>& e4, const std::optional<QSeries>& e6) {
  const QSeries E2 = e2 ? *e2 : eisenstein(2, order);
  const QSeries E4 = e4 ? *e4 : eisenstein(4, order);
  const QSeries E6 = e6 ? *e6 : eisenstein(6, order);
  auto report = [](const std::string& name, const QSeries& residual) {
    QCheck c{name, residual.is_zero(), {}};
    for (unsigned n = 0; n <= residual.order() && !c.holds; ++n) {
      if (sgn(residual[n]) != 0) {
        c.detail = "first nonzero residual coefficient at q^" + std::to_string(n) + ": " + to_string(residual[n]);
        break;
      }
    }
    return c;
  };
  return {
      report("q dE2/dq = (E2^2 - E4)/12", E2.theta() - (E2 * E2 - E4) * Rational(1, 12)),
      report("q dE4/dq = (E2 E4 - E6)/3", E4.theta() - (E2 * E4 - E6) * Rational(1, 3)),
      report("q dE6/dq = (E2 E6 - E4^2)/2", E6.theta() - (E2 * E6 - E4 * E4) * Rational(1, 2)),
  };
}

BasisMatch express_in_basis(const QSeries& s, int weight, unsigned order) {
  BasisMatch out;
  if (weight >= 0) {
    for (int a = weight / 4; a >= 0; --a) {
      const int rest = weight - 4 * a;
      if (rest % 6 == 0) out.monomials.emplace_back(a, rest / 6);
    }
  }
  const std::size_t dim = out.monomials.size();
  if (order + 1 < dim + 2) {
    throw PreconditionError("basis match at weight " + std::to_string(weight) + " needs at least " +
                            std::to_string(dim + 1) + " as truncation order");
  }
  if (s.order() < order) throw PreconditionError("series is truncated below the requested order");
  if (dim == 0) {
    bool zero = true;
    for (unsigned n = 0; n <= order; ++n) zero = zero && sgn(s[n]) == 0;
    out.in_span = zero;
    return out;
  }

  const QSeries E4 = eisenstein(4, order), E6 = eisenstein(6, order);
  std::vector<QSeries> columns;
  for (auto [a, b] : out.monomials) columns.push_back(E4.pow(a) * E6.pow(b));

  // Row-reduce the (order+1) x (dim+1) augmented system.
  const std::size_t rows = order + 1;
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(dim + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < dim; ++c) m[r][c] = columns[c][static_cast<unsigned>(r)];
    m[r][dim] = s[static_cast<unsigned>(r)];
  }
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < dim && pivot_row < rows; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[pivot_row]);
    const Rational inv = 1 / m[pivot_row][c];
    for (auto& x : m[pivot_row]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || sgn(m[r][c]) == 0) continue;
      const Rational factor = m[r][c];
      for (std::size_t cc = c; cc <= dim; ++cc) m[r][cc] -= factor * m[pivot_row][cc];
    }
    pivot_col.push_back(c);
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < rows; ++r) {
    if (sgn(m[r][dim]) != 0) return out;
  }
  if (pivot_col.size() < dim) throw PreconditionError("basis monomials are linearly dependent to this order");
  out.in_span = true;
  out.coefficients.assign(dim, Rational(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) out.coefficients[pivot_col[r]] = m[r][dim];
  return out;
}

QSeries q_bracket(const QSeries& f, const Rational& k, const QSeries& g, const Rational& l, unsigned n) {
  require_same_order(f, g);
  std::vector<QSeries> df{f}, dg{g};
  for (unsigned j = 1; j <= n; ++j) {
    df.push_back(df.back().theta());
    dg.push_back(dg.back().theta());
  }
  QSeries sum(f.order());
  for (unsigned j = 0; j <= n; ++j) {
    const Rational c = bracket_coefficient(k, l, n, j);
    if (sgn(c) != 0) sum += (df[j] * dg[n - j]) * c;
  }
  return sum;
}

std::vector<Rational> calibrate_lambda(const Derivation& partial, const std::vector<Rational>& candidates,
                                       unsigned order, unsigned n_max) {
  const AlgebraPtr& alg = partial.algebra();
  const Assignment asg = classical_assignment(order);
  const std::vector<std::pair<std::string, unsigned>> gens{{"E4", 4}, {"E6", 6}};
  std::vector<Rational> passing;
  for (const Rational& c : candidates) {
    const CanonicalData cd(partial, GradedPoly::generator(alg, "E4") * c);
    bool ok = true;
    for (const auto& [fn, k] : gens) {
      for (const auto& [gn, l] : gens) {
        const GradedPoly f = GradedPoly::generator(alg, fn), g = GradedPoly::generator(alg, gn);
        for (unsigned n = 0; n <= n_max && ok; ++n) {
          const QSeries lhs = evaluate(canonical_bracket(cd, f, g, n), asg);
          ok = lhs == q_bracket(asg.at(fn), k, asg.at(gn), l, n);
        }
      }
    }
    if (ok) passing.push_back(c);
  }
  return passing;
}

}  // namespace rcalg
