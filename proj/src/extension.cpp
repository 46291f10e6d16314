#include "rcalg/extension.hpp"

#include "rcalg/errors.hpp"
#include "rcalg/expr.hpp"

namespace rcalg {

Extension::Extension(std::shared_ptr<const CanonicalData> base, AlgebraPtr extended, std::string e2_name,
                     std::size_t e2_index, Derivation D, std::shared_ptr<const CanonicalData> extended_cd)
    : base_(std::move(base)),
      extended_(std::move(extended)),
      e2_name_(std::move(e2_name)),
      e2_index_(e2_index),
      D_(std::move(D)),
      extended_cd_(std::move(extended_cd)),
      psi_cache_(std::make_shared<PsiCache>()) {}

Extension Extension::build(const CanonicalData& cd, const std::string& e2_name) {
  const AlgebraPtr& base = cd.algebra();
  if (base->index_of(e2_name)) {
    throw ValidationError("extension generator '" + e2_name + "' collides with a generator of the base algebra");
  }
  auto gens = base->generators();
  gens.push_back({e2_name, Rational(2)});
  AlgebraPtr extended = AlgebraSpec::make(base->grading_denominator(), gens);
  if (base->num_relations() > 0) extended = AlgebraSpec::with_relations(extended, base->relations());

  const GradedPoly E2 = GradedPoly::generator(extended, e2_name);
  const GradedPoly lambda = cd.lambda().in(extended);
  std::map<std::string, GradedPoly> d_images, partial_images;
  for (std::size_t i = 0; i < base->size(); ++i) {
    const GradedPoly t = GradedPoly::generator(extended, base->name(i));
    const GradedPoly dt = cd.partial().image(i)->in(extended);
    partial_images.emplace(base->name(i), dt);
    d_images.emplace(base->name(i), dt + E2 * t * base->weight(i));
  }
  const GradedPoly e2_sq = E2 * E2;
  d_images.emplace(e2_name, lambda + e2_sq);
  partial_images.emplace(e2_name, lambda - e2_sq);

  Derivation D(extended, d_images, Rational(2));
  auto extended_cd = std::make_shared<const CanonicalData>(Derivation(extended, partial_images, Rational(2)), lambda);
  return Extension(std::make_shared<const CanonicalData>(cd), extended, e2_name, base->size(), std::move(D),
                   std::move(extended_cd));
}

bool Extension::in_base(const GradedPoly& f) const {
  return !f.in(extended_).mentions(e2_index_);
}

GradedPoly Extension::lower(const GradedPoly& f) const {
  GradedPoly g = f.in(extended_);
  if (g.mentions(e2_index_)) throw PreconditionError("element involves " + e2_name_ + ": " + format(g));
  return g.in(base());
}

GradedPoly Extension::psi(unsigned n) const {
  std::lock_guard<std::mutex> lock(psi_cache_->mutex);
  auto& values = psi_cache_->values;
  if (values.empty()) {
    values.push_back(GradedPoly(base()));
    values.push_back(base_->lambda());
  }
  while (values.size() <= n) {
    const std::size_t j = values.size() - 1;
    GradedPoly next = base_->partial().apply(values[j]);
    next += base_->lambda() * values[j - 1] * Rational(j * (j + 1));
    values.push_back(std::move(next));
  }
  return values[n];
}

std::map<unsigned, GradedPoly> e2_profile(const GradedPoly& f, const Extension& ext) {
  const GradedPoly g = f.in(ext.extended());
  const std::size_t e = ext.e2_index();
  std::map<unsigned, TermList> buckets;
  for (const auto& [m, c] : g.terms()) {
    auto exps = m.exponents();
    const unsigned power = exps[e];
    exps.erase(exps.begin() + static_cast<std::ptrdiff_t>(e));
    buckets[power].emplace_back(Monomial(std::move(exps)), c);
  }
  std::map<unsigned, GradedPoly> out;
  for (auto& [power, terms] : buckets) out.emplace(power, GradedPoly(ext.base(), std::move(terms)));
  return out;
}

std::vector<BracketComparison> verify_bracket_equality(const Extension& ext, const GradedPoly& f,
                                                       const GradedPoly& g, unsigned n_max, Exec exec) {
  const GradedPoly fb = ext.lower(f), gb = ext.lower(g);
  std::vector<BracketComparison> out;
  if (fb.is_zero() || gb.is_zero()) {
    for (unsigned n = 0; n <= n_max; ++n) out.push_back({n, true, GradedPoly(ext.extended())});
    return out;
  }
  const Rational k = require_weight(fb, "verify_bracket_equality");
  const Rational l = require_weight(gb, "verify_bracket_equality");
  const auto cf = canonical_iterates(ext.canonical(), fb, k, n_max);
  const auto cg = canonical_iterates(ext.canonical(), gb, l, n_max);
  const auto df = ext.D().iterates(ext.lift(fb), n_max);
  const auto dg = ext.D().iterates(ext.lift(gb), n_max);
  for (unsigned n = 0; n <= n_max; ++n) {
    GradedPoly canonical = bracket_sum(k, l, n, cf, cg, exec).in(ext.extended());
    GradedPoly standard = bracket_sum(k, l, n, df, dg, exec);
    GradedPoly diff = canonical - standard;
    out.push_back({n, diff.is_zero(), std::move(diff)});
  }
  return out;
}

GradedPoly e2_expansion(const Extension& ext, const GradedPoly& h, unsigned n) {
  const GradedPoly hx = ext.lift(h);
  if (hx.is_zero()) return hx;
  const Rational k = require_weight(hx, "e2_expansion");
  const auto d = ext.D().iterates(hx, n);
  const GradedPoly E2 = ext.e2();
  GradedPoly sum(ext.extended());
  for (unsigned j = 0; j <= n; ++j) {
    Rational c = Rational(factorial(n)) * pochhammer(k + j, n - j) / Rational(factorial(n - j) * factorial(j));
    if ((n - j) % 2 == 1) c = -c;
    if (sgn(c) != 0) sum += E2.pow(n - j) * d[j] * c;
  }
  return sum;
}

GradedPoly e2_expansion_by_cases(const Extension& ext, const GradedPoly& f, unsigned n) {
  const GradedPoly fx = ext.lift(f);
  if (fx.is_zero()) return fx;
  const Rational k = require_weight(fx, "e2_expansion_by_cases");
  const auto d = ext.D().iterates(fx, n);
  const GradedPoly E2 = ext.e2();
  GradedPoly sum(ext.extended());
  auto add = [&](unsigned j, Rational c) {
    if (sgn(c) != 0) sum += E2.pow(n - j) * d[j] * c;
  };
  const Rational nf(factorial(n));
  if (!is_nonpositive_integer(k)) {
    for (unsigned j = 0; j <= n; ++j) {
      // (k+n-1)!/(k+j-1)!, a plain factorial ratio when k is a positive integer
      Rational ratio = is_integer(k)
                           ? Rational(factorial(to_long(k) + n - 1)) / Rational(factorial(to_long(k) + j - 1))
                           : pochhammer(k + j, n - j);
      add(j, sign_power(n - j) * nf * ratio / Rational(factorial(j) * factorial(n - j)));
    }
    return sum;
  }
  const long mk = -to_long(k);
  if (static_cast<long>(n) >= mk + 1) {
    for (unsigned j = static_cast<unsigned>(mk + 1); j <= n; ++j) {
      Rational c = nf * Rational(factorial(n - mk - 1)) /
                   Rational(factorial(j) * factorial(n - j) * factorial(j - mk - 1));
      add(j, sign_power(n - j) * c);
    }
  } else {
    for (unsigned j = 0; j <= n; ++j) {
      add(j, nf * Rational(factorial(mk - j)) / Rational(factorial(j) * factorial(n - j) * factorial(mk - n)));
    }
  }
  return sum;
}

GradedPoly d_power_e2_closed_form(const Extension& ext, unsigned n) {
  const GradedPoly E2 = ext.e2();
  GradedPoly sum = E2.pow(n + 2) * Rational(factorial(n + 1));
  const Integer top = factorial(n + 1) * factorial(n + 2);
  for (unsigned j = 0; j <= n + 1; ++j) {
    const GradedPoly psi = ext.psi(j);
    if (psi.is_zero()) continue;
    Rational c(top, factorial(j) * factorial(j + 1) * factorial(n + 1 - j));
    c.canonicalize();
    sum += E2.pow(n + 1 - j) * ext.lift(psi) * c;
  }
  return sum;
}

GradedPoly d_power_e2(const Extension& ext, unsigned n) {
  GradedPoly value = ext.D().iterate(ext.e2(), n + 1);
  if (!(value == d_power_e2_closed_form(ext, n))) {
    throw Error("D^" + std::to_string(n + 1) + "(" + ext.e2_name() + ") disagrees with its closed form");
  }
  return value;
}

Integer d_power_binomial_sum(unsigned n) {
  const Integer top = factorial(n + 1) * factorial(n + 2);
  Integer sum = 0;
  for (unsigned j = 0; j <= n + 1; ++j) {
    Integer term = top / (factorial(j + 1) * factorial(n + 1 - j));
    sum += (j % 2 == 0) ? term : Integer(-term);
  }
  return sum;
}

GradedPoly kk_theta_f(const Extension& ext, const GradedPoly& f, unsigned n, Exec exec) {
  const GradedPoly fb = ext.lower(f);
  if (fb.is_zero()) return GradedPoly(ext.extended());
  const Rational k = require_weight(fb, "kk_theta_f");
  const GradedPoly fx = ext.lift(fb);
  GradedPoly out = ext.D().iterate(fx, n + 1);
  const Rational c = Rational(n) + k;
  if (sgn(c) != 0) out -= standard_bracket(ext.D(), ext.e2(), fx, n, exec) * c;
  return out;
}

GradedPoly kk_theta_f_closed_form(const Extension& ext, const GradedPoly& f, unsigned n) {
  const GradedPoly fb = ext.lower(f);
  if (fb.is_zero()) return GradedPoly(ext.extended());
  const Rational k = require_weight(fb, "kk_theta_f_closed_form");
  const auto iter = canonical_iterates(ext.canonical(), fb, k, n + 1);
  GradedPoly sum(ext.base());
  const Rational nk = Rational(n) + k;
  for (unsigned j = 0; j <= n; ++j) {
    Rational c = gen_binomial(Rational(n + 1), n - j) * gen_binomial(nk - 1, j);
    if (j % 2 == 1) c = -c;
    if (sgn(c) != 0) sum += ext.psi(j) * iter[n - j] * c;
  }
  return ext.lift(iter[n + 1] - sum * nk);
}

GradedPoly kk_theta_e2(const Extension& ext, unsigned n, Exec exec) {
  const GradedPoly E2 = ext.e2();
  GradedPoly out(ext.extended());
  if (n % 2 == 0) out = ext.D().iterate(E2, n + 1) * Rational(2);
  out -= standard_bracket(ext.D(), E2, E2, n, exec) * Rational(n + 2);
  return out;
}

GradedPoly kk_theta_e2_closed_form(const Extension& ext, unsigned n) {
  if (n % 2 == 1) return GradedPoly(ext.extended());
  GradedPoly sum(ext.base());
  for (unsigned j = 0; j <= n; ++j) {
    Rational c = gen_binomial(Rational(n + 1), n - j) * gen_binomial(Rational(n + 1), j);
    if (j % 2 == 1) c = -c;
    sum += ext.psi(j) * ext.psi(n - j) * c;
  }
  return ext.lift(ext.psi(n + 1) * Rational(2) - sum * Rational(n + 2));
}

}  // namespace rcalg
