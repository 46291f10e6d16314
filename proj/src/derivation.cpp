#include "rcalg/derivation.hpp"

#include <algorithm>

#include "rcalg/errors.hpp"
#include "rcalg/expr.hpp"
#include "rcalg/kernels.hpp"

namespace rcalg {

Derivation::Derivation(AlgebraPtr algebra, const std::map<std::string, GradedPoly>& images,
                       std::optional<Rational> degree)
    : algebra_(std::move(algebra)), images_(algebra_->size()), degree_(std::move(degree)) {
  for (const auto& [name, image] : images) {
    images_[algebra_->require_index(name)] = image.in(algebra_);
  }
  validate_degree();
}

Derivation::Derivation(AlgebraPtr algebra, std::vector<std::optional<GradedPoly>> images,
                       std::optional<Rational> degree)
    : algebra_(std::move(algebra)), images_(std::move(images)), degree_(std::move(degree)) {}

void Derivation::validate_degree() const {
  if (!degree_) return;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!images_[i]) continue;
    auto h = weight_of(*images_[i]);
    const Rational expected = algebra_->weight(i) + *degree_;
    if (h.kind == Homogeneity::Kind::Zero) continue;
    if (h.kind == Homogeneity::Kind::Inhomogeneous || h.weight != expected) {
      throw ValidationError("image of '" + algebra_->name(i) + "' is not homogeneous of weight " +
                            to_string(expected) + ": " + format(*images_[i]));
    }
  }
}

Derivation Derivation::zero(AlgebraPtr algebra) {
  std::vector<std::optional<GradedPoly>> images(algebra->size(), GradedPoly(algebra));
  return Derivation(algebra, std::move(images), std::nullopt);
}

Derivation Derivation::weight(AlgebraPtr algebra) {
  std::vector<std::optional<GradedPoly>> images;
  for (std::size_t i = 0; i < algebra->size(); ++i) {
    images.emplace_back(GradedPoly::generator(algebra, algebra->name(i)) * algebra->weight(i));
  }
  return Derivation(algebra, std::move(images), Rational(0));
}

Derivation Derivation::partial(AlgebraPtr algebra, std::string_view name, const Rational& scale) {
  std::vector<std::optional<GradedPoly>> images(algebra->size(), GradedPoly(algebra));
  images[algebra->require_index(name)] = GradedPoly::constant(algebra, scale);
  return Derivation(algebra, std::move(images), -algebra->weight(algebra->require_index(name)));
}

const std::optional<GradedPoly>& Derivation::image(std::string_view name) const {
  return images_[algebra_->require_index(name)];
}

bool Derivation::total() const {
  return std::all_of(images_.begin(), images_.end(), [](const auto& i) { return i.has_value(); });
}

GradedPoly Derivation::apply(const GradedPoly& f, Exec exec) const {
  const GradedPoly* source = &f;
  GradedPoly local(algebra_);
  if (!compatible(f.algebra(), algebra_)) {
    local = f.in(algebra_);
    source = &local;
  }
  auto terms = source->terms();
  std::size_t work = 0;
  for (const auto& [m, c] : terms) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!images_[i]) {
        throw MissingImageError("derivation has no image for generator '" + algebra_->name(i) + "'");
      }
      work += images_[i]->size();
    }
  }
  TermList out = kernels::accumulate(
      terms.size(), work,
      [&](std::size_t t, TermList& acc) {
        const auto& [m, c] = terms[t];
        for (std::size_t i = 0; i < m.size(); ++i) {
          if (m[i] == 0 || images_[i]->is_zero()) continue;
          Monomial rest = m.lowered(i);
          Rational scale = c * m[i];
          for (const auto& [im, ic] : images_[i]->terms()) acc.emplace_back(rest * im, scale * ic);
        }
      },
      exec);
  return GradedPoly(algebra_, std::move(out));
}

GradedPoly Derivation::iterate(const GradedPoly& f, unsigned n) const {
  GradedPoly r = f.in(algebra_);
  for (unsigned i = 0; i < n; ++i) r = apply(r);
  return r;
}

std::vector<GradedPoly> Derivation::iterates(const GradedPoly& f, unsigned n) const {
  std::vector<GradedPoly> out;
  out.reserve(n + 1);
  out.push_back(f.in(algebra_));
  for (unsigned i = 0; i < n; ++i) out.push_back(apply(out.back()));
  return out;
}

Derivation Derivation::over(const AlgebraPtr& target) const {
  std::map<std::string, GradedPoly> images;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i]) images.emplace(algebra_->name(i), images_[i]->in(target));
  }
  return Derivation(target, images, degree_);
}

Derivation Derivation::scaled(const Rational& c) const {
  auto images = images_;
  for (auto& i : images) {
    if (i) *i *= c;
  }
  return Derivation(algebra_, std::move(images), degree_);
}

namespace {

std::optional<Rational> common_degree(const Derivation& a, const Derivation& b) {
  if (a.declared_degree() && b.declared_degree() && *a.declared_degree() == *b.declared_degree()) {
    return a.declared_degree();
  }
  return std::nullopt;
}

void require_same_algebra(const Derivation& a, const Derivation& b) {
  if (!compatible(a.algebra(), b.algebra())) throw ValidationError("derivations act on different algebras");
}

}  // namespace

Derivation operator+(const Derivation& a, const Derivation& b) {
  require_same_algebra(a, b);
  std::vector<std::optional<GradedPoly>> images(a.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (a.images_[i] && b.images_[i]) images[i] = *a.images_[i] + *b.images_[i];
  }
  return Derivation(a.algebra_, std::move(images), common_degree(a, b));
}

Derivation operator-(const Derivation& a, const Derivation& b) { return a + b.scaled(-1); }

bool operator==(const Derivation& a, const Derivation& b) {
  if (!compatible(a.algebra_, b.algebra_)) return false;
  for (std::size_t i = 0; i < a.images_.size(); ++i) {
    if (a.images_[i].has_value() != b.images_[i].has_value()) return false;
    if (a.images_[i] && !(*a.images_[i] == *b.images_[i])) return false;
  }
  return true;
}

Derivation commutator(const Derivation& a, const Derivation& b) {
  require_same_algebra(a, b);
  std::map<std::string, GradedPoly> images;
  const auto& alg = a.algebra();
  for (std::size_t i = 0; i < alg->size(); ++i) {
    if (!a.image(i) || !b.image(i)) {
      throw MissingImageError("commutator needs images of '" + alg->name(i) + "' under both derivations");
    }
    images.emplace(alg->name(i), a.apply(*b.image(i)) - b.apply(*a.image(i)));
  }
  std::optional<Rational> degree;
  if (a.declared_degree() && b.declared_degree()) degree = *a.declared_degree() + *b.declared_degree();
  return Derivation(alg, images, degree);
}

bool Sl2Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Sl2Check& c) { return c.holds; });
}

Sl2Report check_sl2_triple(const Derivation& D, const Derivation& W, const Derivation& delta) {
  require_same_algebra(D, W);
  require_same_algebra(D, delta);
  const Derivation d_delta = commutator(D, delta);
  const Derivation w_d = commutator(W, D);
  const Derivation w_delta = commutator(W, delta);
  const auto& alg = D.algebra();
  Sl2Report report;
  for (std::size_t i = 0; i < alg->size(); ++i) {
    auto record = [&](const char* relation, const GradedPoly& lhs, const GradedPoly& rhs) {
      GradedPoly residual = lhs - rhs;
      report.checks.push_back({alg->name(i), relation, residual.is_zero(),
                               residual.is_zero() ? std::string() : "residual " + format(residual)});
    };
    record("[D,delta]=W", *d_delta.image(i), *W.image(i));
    record("[W,D]=2D", *w_d.image(i), *D.image(i) * Rational(2));
    record("[W,delta]=-2delta", *w_delta.image(i), *delta.image(i) * Rational(-2));
  }
  return report;
}

}  // namespace rcalg
