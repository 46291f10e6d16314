#include "rcalg/brackets.hpp"

#include "rcalg/errors.hpp"
#include "rcalg/kernels.hpp"

namespace rcalg {

CanonicalData::CanonicalData(Derivation partial, GradedPoly lambda)
    : partial_(std::move(partial)), lambda_(lambda.in(partial_.algebra())) {
  auto h = weight_of(lambda_);
  if (h.kind == Homogeneity::Kind::Inhomogeneous || (h.kind == Homogeneity::Kind::Homogeneous && h.weight != 4)) {
    throw ValidationError("Lambda must be homogeneous of weight 4");
  }
  if (!partial_.total()) throw ValidationError("Serre-type derivation must have an image for every generator");
  if (partial_.declared_degree()) {
    if (*partial_.declared_degree() != 2) throw ValidationError("Serre-type derivation must have degree 2");
    return;
  }
  const auto& alg = partial_.algebra();
  for (std::size_t i = 0; i < alg->size(); ++i) {
    auto w = weight_of(*partial_.image(i));
    if (w.kind == Homogeneity::Kind::Inhomogeneous ||
        (w.kind == Homogeneity::Kind::Homogeneous && w.weight != alg->weight(i) + 2)) {
      throw ValidationError("image of '" + alg->name(i) + "' under the Serre-type derivation has the wrong weight");
    }
  }
}

Rational bracket_coefficient(const Rational& k, const Rational& l, unsigned n, unsigned j) {
  Rational c = pochhammer(k + j, n - j) * pochhammer(l + (n - j), j);
  c /= Rational(factorial(j) * factorial(n - j));
  return (j % 2 == 0) ? c : Rational(-c);
}

GradedPoly bracket_sum(const Rational& k, const Rational& l, unsigned n, const std::vector<GradedPoly>& left,
                       const std::vector<GradedPoly>& right, Exec exec) {
  if (left.size() <= n || right.size() <= n) throw PreconditionError("bracket_sum: not enough iterates");
  const AlgebraPtr& alg = left.front().algebra();
  std::vector<GradedPoly> parts(n + 1, GradedPoly(alg));
  auto term = [&](unsigned j) {
    Rational c = bracket_coefficient(k, l, n, j);
    if (sgn(c) == 0 || left[j].is_zero() || right[n - j].is_zero()) return;
    parts[j] = multiply(left[j], right[n - j], exec) * c;
  };
  std::size_t work = 0;
  for (unsigned j = 0; j <= n; ++j) work += left[j].size() * right[n - j].size();
  if (exec == Exec::Parallel && work >= kernels::kMinParallelWork && kernels::max_threads() > 1) {
#pragma omp parallel for schedule(dynamic, 1)
    for (unsigned j = 0; j <= n; ++j) term(j);
  } else {
    for (unsigned j = 0; j <= n; ++j) term(j);
  }
  GradedPoly sum(alg);
  for (auto& p : parts) sum += p;
  return sum;
}

GradedPoly standard_bracket(const Derivation& D, const GradedPoly& f, const GradedPoly& g, unsigned n, Exec exec) {
  if (f.is_zero() || g.is_zero()) return GradedPoly(D.algebra());
  const Rational k = require_weight(f, "standard_bracket");
  const Rational l = require_weight(g, "standard_bracket");
  auto left = D.iterates(f, n);
  auto right = (f == g) ? left : D.iterates(g, n);
  return bracket_sum(k, l, n, left, right, exec);
}

std::vector<GradedPoly> canonical_iterates(const CanonicalData& cd, const GradedPoly& h, const Rational& k,
                                           unsigned j) {
  const auto& alg = cd.algebra();
  std::vector<GradedPoly> out;
  out.reserve(j + 1);
  out.push_back(h.in(alg));
  if (j >= 1) out.push_back(cd.partial().apply(out[0]));
  for (unsigned i = 1; i < j; ++i) {
    // partial_(i+1) h = partial(partial_(i) h) + i(i+k-1) Lambda partial_(i-1) h
    GradedPoly next = cd.partial().apply(out[i]);
    Rational c = Rational(i) * (k + (i - 1));
    if (sgn(c) != 0) next += cd.lambda() * out[i - 1] * c;
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<GradedPoly> canonical_iterates(const CanonicalData& cd, const GradedPoly& h, unsigned j) {
  if (h.is_zero()) return std::vector<GradedPoly>(j + 1, GradedPoly(cd.algebra()));
  return canonical_iterates(cd, h, require_weight(h, "canonical_iterate"), j);
}

GradedPoly canonical_iterate(const CanonicalData& cd, const GradedPoly& h, unsigned j) {
  return canonical_iterates(cd, h, j).back();
}

GradedPoly canonical_bracket(const CanonicalData& cd, const GradedPoly& f, const GradedPoly& g, unsigned n,
                             Exec exec) {
  if (f.is_zero() || g.is_zero()) return GradedPoly(cd.algebra());
  const Rational k = require_weight(f, "canonical_bracket");
  const Rational l = require_weight(g, "canonical_bracket");
  auto left = canonical_iterates(cd, f, k, n);
  auto right = (f == g) ? left : canonical_iterates(cd, g, l, n);
  return bracket_sum(k, l, n, left, right, exec);
}

std::optional<std::pair<unsigned, unsigned>> bracket_support_window(long k, long l, unsigned n) {
  if (!(l <= k && k < 0)) throw PreconditionError("bracket_support_window requires l <= k < 0");
  const long nn = static_cast<long>(n);
  if (nn <= -k) return std::pair<unsigned, unsigned>{0, n};
  if (nn <= -l) return std::pair<unsigned, unsigned>{static_cast<unsigned>(-k + 1), n};
  if (nn <= -k - l + 1) return std::nullopt;
  return std::pair<unsigned, unsigned>{static_cast<unsigned>(-k + 1), static_cast<unsigned>(nn + l - 1)};
}

}  // namespace rcalg
