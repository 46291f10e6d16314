#include "rcalg/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "rcalg/errors.hpp"
#include "rcalg/kernels.hpp"

namespace rcalg {

// ---- Monomial --------------------------------------------------------------

Monomial::Monomial(std::vector<Exponent> exps)
    : exps_(std::move(exps)), degree_(std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0})) {}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, Exponent power) {
  Monomial m(num_vars);
  m.exps_[index] = power;
  m.degree_ = power;
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& dividend) const {
  Monomial r(dividend);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
  r.degree_ -= degree_;
  return r;
}

Monomial Monomial::lowered(std::size_t index) const {
  Monomial r(*this);
  --r.exps_[index];
  --r.degree_;
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return a.exps_ <=> b.exps_;
}

// ---- AlgebraSpec -----------------------------------------------------------

namespace {

bool valid_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

AlgebraSpec::AlgebraSpec(unsigned grading_denominator, std::vector<Generator> generators)
    : denominator_(grading_denominator), generators_(std::move(generators)) {
  if (denominator_ == 0) throw ValidationError("grading denominator must be positive");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (!valid_identifier(g.name)) throw ValidationError("invalid generator name '" + g.name + "'");
    if (!index_.emplace(g.name, i).second) throw ValidationError("duplicate generator name '" + g.name + "'");
    if (!is_integer(Rational(g.weight * denominator_))) {
      throw ValidationError("weight " + to_string(g.weight) + " of '" + g.name + "' is not a multiple of 1/" +
                            std::to_string(denominator_));
    }
  }
}

AlgebraPtr AlgebraSpec::make(unsigned grading_denominator, std::vector<Generator> generators) {
  return std::make_shared<const AlgebraSpec>(grading_denominator, std::move(generators));
}

AlgebraPtr AlgebraSpec::with_relations(const AlgebraPtr& base, const std::vector<GradedPoly>& relations) {
  auto spec = std::make_shared<AlgebraSpec>(base->denominator_, base->generators_);
  for (const auto& r : relations) {
    if (r.is_zero()) continue;
    GradedPoly local = r.in(base);
    spec->relation_terms_.emplace_back(local.terms().begin(), local.terms().end());
  }
  return spec;
}

std::optional<std::size_t> AlgebraSpec::index_of(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t AlgebraSpec::require_index(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw ValidationError("unknown generator '" + std::string(name) + "'");
  return *i;
}

GradedPoly AlgebraSpec::relation(std::size_t i) const {
  return GradedPoly(shared_from_this(), relation_terms_.at(i));
}

std::vector<GradedPoly> AlgebraSpec::relations() const {
  std::vector<GradedPoly> out;
  for (std::size_t i = 0; i < relation_terms_.size(); ++i) out.push_back(relation(i));
  return out;
}

Rational AlgebraSpec::monomial_weight(const Monomial& m) const {
  Rational w = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0) w += generators_[i].weight * m[i];
  }
  return w;
}

bool AlgebraSpec::same_generators(const AlgebraSpec& other) const {
  if (generators_.size() != other.generators_.size()) return false;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name != other.generators_[i].name || generators_[i].weight != other.generators_[i].weight) {
      return false;
    }
  }
  return true;
}

bool compatible(const AlgebraPtr& a, const AlgebraPtr& b) { return a == b || a->same_generators(*b); }

namespace {

void require_compatible(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!compatible(a, b)) throw ValidationError("polynomials belong to different algebras");
}

}  // namespace

// ---- GradedPoly ------------------------------------------------------------

GradedPoly::GradedPoly(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

GradedPoly::GradedPoly(AlgebraPtr algebra, TermList terms) : algebra_(std::move(algebra)), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.first.size() != algebra_->size()) throw ValidationError("monomial arity does not match algebra");
  }
  kernels::canonicalize(terms_);
}

GradedPoly GradedPoly::constant(AlgebraPtr algebra, const Rational& c) {
  GradedPoly p(std::move(algebra));
  if (sgn(c) != 0) p.terms_.emplace_back(Monomial(p.algebra_->size()), c);
  return p;
}

GradedPoly GradedPoly::generator(AlgebraPtr algebra, std::string_view name, Monomial::Exponent power) {
  GradedPoly p(std::move(algebra));
  std::size_t i = p.algebra_->require_index(name);
  p.terms_.emplace_back(Monomial::variable(p.algebra_->size(), i, power), Rational(1));
  return p;
}

GradedPoly GradedPoly::monomial(AlgebraPtr algebra, Monomial m, const Rational& c) {
  GradedPoly p(std::move(algebra));
  if (m.size() != p.algebra_->size()) throw ValidationError("monomial arity does not match algebra");
  if (sgn(c) != 0) p.terms_.emplace_back(std::move(m), c);
  return p;
}

Rational GradedPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_unit()) return terms_.back().second;
  return 0;
}

Rational GradedPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first > key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

bool GradedPoly::mentions(std::size_t generator_index) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.first[generator_index] != 0; });
}

std::uint64_t GradedPoly::max_exponent(std::size_t generator_index) const {
  std::uint64_t e = 0;
  for (const auto& t : terms_) e = std::max<std::uint64_t>(e, t.first[generator_index]);
  return e;
}

GradedPoly GradedPoly::in(const AlgebraPtr& target) const {
  if (compatible(algebra_, target)) return GradedPoly(target, terms_);
  std::vector<std::optional<std::size_t>> map(algebra_->size());
  for (std::size_t i = 0; i < algebra_->size(); ++i) map[i] = target->index_of(algebra_->name(i));
  TermList out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Exponent> e(target->size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!map[i]) {
        throw ValidationError("generator '" + algebra_->name(i) + "' does not exist in the target algebra");
      }
      e[*map[i]] = m[i];
    }
    out.emplace_back(Monomial(std::move(e)), c);
  }
  return GradedPoly(target, std::move(out));
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& other) {
  require_compatible(algebra_, other.algebra_);
  terms_ = kernels::merge_add(terms_, other.terms_);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& other) { return *this += -other; }

GradedPoly& GradedPoly::operator*=(const GradedPoly& other) { return *this = multiply(*this, other); }

GradedPoly& GradedPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) { return multiply(a, b); }

GradedPoly operator/(GradedPoly a, const Rational& c) {
  if (sgn(c) == 0) throw PreconditionError("division of a polynomial by zero");
  return a *= Rational(1 / c);
}

bool operator==(const GradedPoly& a, const GradedPoly& b) {
  return compatible(a.algebra_, b.algebra_) && a.terms_ == b.terms_;
}

GradedPoly GradedPoly::pow(unsigned e) const {
  GradedPoly result = constant(algebra_, 1);
  GradedPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

GradedPoly multiply(const GradedPoly& a, const GradedPoly& b, Exec exec) {
  require_compatible(a.algebra(), b.algebra());
  if (a.is_zero() || b.is_zero()) return GradedPoly(a.algebra());
  return GradedPoly(a.algebra(), kernels::multiply(a.terms(), b.terms(), exec));
}

// ---- Grading ---------------------------------------------------------------

Homogeneity weight_of(const GradedPoly& f) {
  if (f.is_zero()) return {Homogeneity::Kind::Zero, Rational(0)};
  const auto& alg = *f.algebra();
  Rational w = alg.monomial_weight(f.terms().front().first);
  for (const auto& t : f.terms().subspan(1)) {
    if (alg.monomial_weight(t.first) != w) return {Homogeneity::Kind::Inhomogeneous, Rational(0)};
  }
  return {Homogeneity::Kind::Homogeneous, w};
}

Rational require_weight(const GradedPoly& f, std::string_view context) {
  auto h = weight_of(f);
  if (h.kind == Homogeneity::Kind::Inhomogeneous) {
    throw InhomogeneousError(std::string(context) + ": input is not homogeneous");
  }
  if (h.kind == Homogeneity::Kind::Zero) {
    throw PreconditionError(std::string(context) + ": zero input has no distinguished weight");
  }
  return h.weight;
}

std::map<Rational, GradedPoly> homogeneous_components(const GradedPoly& f) {
  std::map<Rational, TermList> buckets;
  for (const auto& t : f.terms()) buckets[f.algebra()->monomial_weight(t.first)].push_back(t);
  std::map<Rational, GradedPoly> out;
  for (auto& [w, terms] : buckets) out.emplace(w, GradedPoly(f.algebra(), std::move(terms)));
  return out;
}

// ---- Division and reduction ------------------------------------------------

namespace {

// Division of `f` by the `divisors` with leading terms taken in deglex order.
// Returns the remainder and fills `quotients`.
GradedPoly divide(const GradedPoly& f, const std::vector<GradedPoly>& divisors, std::vector<GradedPoly>* quotients,
                  std::size_t max_steps) {
  const auto& alg = f.algebra();
  TermList work(f.terms().begin(), f.terms().end());
  TermList remainder;
  std::vector<TermList> quot(divisors.size());
  std::size_t steps = 0;
  while (!work.empty()) {
    const Term lead = work.front();
    bool reduced = false;
    for (std::size_t d = 0; d < divisors.size(); ++d) {
      const auto& dl = divisors[d].terms().front();
      if (!dl.first.divides(lead.first)) continue;
      if (++steps > max_steps) {
        throw Error("relation reduction did not terminate within " + std::to_string(max_steps) + " steps");
      }
      Monomial m = dl.first.quotient_of(lead.first);
      Rational c = lead.second / dl.second;
      TermList sub;
      sub.reserve(divisors[d].size());
      for (const auto& [dm, dc] : divisors[d].terms()) sub.emplace_back(m * dm, Rational(-c * dc));
      work = kernels::merge_add(work, sub);
      quot[d].emplace_back(std::move(m), std::move(c));
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(lead);
      work.erase(work.begin());
    }
  }
  if (quotients) {
    quotients->clear();
    for (auto& q : quot) quotients->emplace_back(alg, std::move(q));
  }
  return GradedPoly(alg, std::move(remainder));
}

}  // namespace

GradedPoly reduce_mod_relations(const GradedPoly& f, std::size_t max_steps) {
  auto relations = f.algebra()->relations();
  if (relations.empty()) return f;
  std::vector<GradedPoly> divisors;
  for (auto& r : relations) divisors.push_back(r.in(f.algebra()));
  return divide(f, divisors, nullptr, max_steps);
}

std::optional<GradedPoly> divide_exact(const GradedPoly& dividend, const GradedPoly& divisor) {
  if (divisor.is_zero()) throw PreconditionError("division by the zero polynomial");
  std::vector<GradedPoly> quotients;
  GradedPoly r = divide(dividend, {divisor.in(dividend.algebra())}, &quotients, 10000000);
  if (!r.is_zero()) return std::nullopt;
  return quotients.front();
}

GradedPoly substitute(const GradedPoly& f, const std::map<std::string, GradedPoly>& images, const AlgebraPtr& target) {
  const auto& alg = *f.algebra();
  std::vector<GradedPoly> image;
  image.reserve(alg.size());
  for (std::size_t i = 0; i < alg.size(); ++i) {
    auto it = images.find(alg.name(i));
    image.push_back(it != images.end() ? it->second.in(target) : GradedPoly::generator(target, alg.name(i)));
  }
  std::vector<std::vector<GradedPoly>> powers(alg.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const GradedPoly& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(GradedPoly::constant(target, 1));
    while (p.size() <= e) p.push_back(p.back() * image[i]);
    return p[e];
  };
  GradedPoly out(target);
  for (const auto& [m, c] : f.terms()) {
    GradedPoly t = GradedPoly::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) t = t * power(i, m[i]);
    }
    out += t;
  }
  return out;
}

}  // namespace rcalg
