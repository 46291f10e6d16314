#include "property_suite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "rcalg/algebra_file.hpp"
#include "rcalg/brackets.hpp"
#include "rcalg/expr.hpp"

namespace props {
namespace {

using namespace rcalg;
using Rng = std::mt19937_64;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational random_coefficient(Rng& rng) {
  int num = 0;
  while (num == 0) num = uniform(rng, -9, 9);
  Rational c(num, uniform(rng, 1, 6));
  c.canonicalize();
  return c;
}

// Every monomial of total degree <= max_degree.
std::vector<Monomial> monomials(std::size_t vars, unsigned max_degree) {
  std::vector<Monomial> out;
  std::vector<Monomial::Exponent> e(vars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == vars) {
      out.emplace_back(e);
      return;
    }
    for (unsigned p = 0; p <= left; ++p) {
      e[i] = p;
      rec(i + 1, left - p);
    }
    e[i] = 0;
  };
  rec(0, max_degree);
  return out;
}

struct Sampler {
  AlgebraPtr alg;
  std::vector<Monomial> all;
  std::vector<std::vector<Monomial>> by_weight;

  Sampler(AlgebraPtr a, unsigned max_degree) : alg(std::move(a)), all(monomials(alg->size(), max_degree)) {
    std::map<Rational, std::vector<Monomial>> buckets;
    for (const auto& m : all) buckets[alg->monomial_weight(m)].push_back(m);
    for (auto& [w, ms] : buckets) by_weight.push_back(std::move(ms));
  }

  GradedPoly poly(Rng& rng, int max_terms = 5) const {
    TermList terms;
    const int count = uniform(rng, 0, max_terms);
    for (int i = 0; i < count; ++i) {
      terms.emplace_back(all[uniform(rng, 0, static_cast<int>(all.size()) - 1)], random_coefficient(rng));
    }
    return GradedPoly(alg, std::move(terms));
  }

  // Nonzero and homogeneous.
  GradedPoly homogeneous(Rng& rng, int max_terms = 3) const {
    const auto& ms = by_weight[uniform(rng, 0, static_cast<int>(by_weight.size()) - 1)];
    TermList terms;
    std::vector<std::size_t> idx(ms.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    const auto count = std::min<std::size_t>(idx.size(), static_cast<std::size_t>(uniform(rng, 1, max_terms)));
    for (std::size_t i = 0; i < count; ++i) terms.emplace_back(ms[idx[i]], random_coefficient(rng));
    return GradedPoly(alg, std::move(terms));
  }
};

struct Fixtures {
  AlgebraPtr mixed;  // grading denominator 2, weights of both signs
  std::vector<std::pair<std::string, LoadedAlgebra>> loaded;
  std::vector<Extension> extensions;  // classical, negweights, fracweights

  Fixtures() {
    mixed = AlgebraSpec::make(2, {{"x", Rational(1, 2)}, {"y", Rational(-3, 2)}, {"z", Rational(3)}});
    for (const auto& n : builtin_names()) loaded.emplace_back(n, load_algebra(n));
    for (const auto& n : {"classical", "negweights", "fracweights"}) extensions.push_back(*load_algebra(n).extension);
  }
};

const Fixtures& fixtures() {
  static const Fixtures f;
  return f;
}

using Check = std::function<std::string(Rng&, unsigned)>;  // empty string on success

std::string expect_equal(const GradedPoly& a, const GradedPoly& b, const std::string& what) {
  if (a == b) return {};
  return what + ": " + format(a) + " != " + format(b);
}

const std::map<std::string, Check>& checks() {
  static const std::map<std::string, Check> table = [] {
    std::map<std::string, Check> t;
    const Fixtures& fx = fixtures();

    t["ring laws"] = [&fx](Rng& rng, unsigned) {
      const Sampler s(fx.mixed, 3);
      const GradedPoly a = s.poly(rng), b = s.poly(rng), c = s.poly(rng);
      std::string e = expect_equal((a * b) * c, a * (b * c), "associativity");
      if (e.empty()) e = expect_equal(a * b, b * a, "commutativity of *");
      if (e.empty()) e = expect_equal(a + b, b + a, "commutativity of +");
      if (e.empty()) e = expect_equal(a * (b + c), a * b + a * c, "distributivity");
      if (e.empty()) e = expect_equal(a - a, GradedPoly(fx.mixed), "additive inverse");
      return e;
    };
    t["product oracle"] = [&fx](Rng& rng, unsigned) -> std::string {
      const Sampler s(fx.mixed, 4);
      const GradedPoly a = s.poly(rng, 8), b = s.poly(rng, 8);
      return oracle::to_map(a * b) == oracle::mul(oracle::to_map(a), oracle::to_map(b)) ? "" : "product differs";
    };
    t["serial/parallel agreement"] = [&fx](Rng& rng, unsigned) {
      const Sampler s(fx.mixed, 5);
      const GradedPoly a = s.poly(rng, 40), b = s.poly(rng, 40);
      return expect_equal(multiply(a, b, Exec::Serial), multiply(a, b, Exec::Parallel), "product");
    };
    t["weight additivity"] = [&fx](Rng& rng, unsigned) -> std::string {
      const Sampler s(fx.mixed, 3);
      const GradedPoly f = s.homogeneous(rng), g = s.homogeneous(rng);
      const Rational w = weight_of(f * g).weight;
      return w == weight_of(f).weight + weight_of(g).weight ? "" : "weight of product " + to_string(w);
    };
    t["homogeneous components"] = [&fx](Rng& rng, unsigned) -> std::string {
      const Sampler s(fx.mixed, 3);
      const GradedPoly f = s.poly(rng, 8);
      GradedPoly sum(fx.mixed);
      for (const auto& [w, c] : homogeneous_components(f)) {
        if (!(weight_of(c).kind == Homogeneity::Kind::Homogeneous && weight_of(c).weight == w)) {
          return "component of weight " + to_string(w) + " is " + format(c);
        }
        sum += c;
      }
      return expect_equal(sum, f, "re-summed components");
    };
    t["Leibniz"] = [&fx](Rng& rng, unsigned i) {
      const auto& [name, la] = fx.loaded[i % fx.loaded.size()];
      const Sampler s(la.algebra, 2);
      const GradedPoly f = s.poly(rng), g = s.poly(rng);
      const Derivation& d = la.D;
      return expect_equal(d.apply(f * g), d.apply(f) * g + f * d.apply(g), name + " D(fg)");
    };
    t["derivation degree"] = [&fx](Rng& rng, unsigned i) -> std::string {
      const auto& [name, la] = fx.loaded[i % fx.loaded.size()];
      const Sampler s(la.algebra, 3);
      const GradedPoly f = s.homogeneous(rng);
      const GradedPoly df = la.D.apply(f);
      const Homogeneity h = weight_of(df);
      if (h.kind == Homogeneity::Kind::Zero) return {};
      if (h.kind == Homogeneity::Kind::Homogeneous && h.weight == weight_of(f).weight + 2) return {};
      return name + ": D(" + format(f) + ") has the wrong weight";
    };
    t["weight eigenvalue"] = [&fx](Rng& rng, unsigned i) {
      const auto& [name, la] = fx.loaded[i % fx.loaded.size()];
      const Sampler s(la.algebra, 3);
      const GradedPoly f = s.homogeneous(rng);
      return expect_equal(Derivation::weight(la.algebra).apply(f), f * weight_of(f).weight, name + " W f");
    };
    t["commutator Leibniz"] = [&fx](Rng& rng, unsigned i) {
      const auto& [name, la] = fx.loaded[i % fx.loaded.size()];
      const Derivation c = commutator(la.D, Derivation::weight(la.algebra));
      const Sampler s(la.algebra, 2);
      const GradedPoly f = s.poly(rng), g = s.poly(rng);
      return expect_equal(c.apply(f * g), c.apply(f) * g + f * c.apply(g), name + " [D,W](fg)");
    };
    t["bracket symmetry"] = [&fx](Rng& rng, unsigned i) {
      const Extension& ext = fx.extensions[i % fx.extensions.size()];
      const auto n = static_cast<unsigned>(uniform(rng, 0, 6));
      const int sign = n % 2 == 0 ? 1 : -1;
      const Sampler base(ext.base(), 2), full(ext.extended(), 2);
      const GradedPoly f = base.homogeneous(rng), g = base.homogeneous(rng);
      std::string e = expect_equal(canonical_bracket(ext.canonical(), f, g, n),
                                   canonical_bracket(ext.canonical(), g, f, n) * sign, "canonical");
      if (!e.empty()) return e;
      const GradedPoly F = full.homogeneous(rng), G = full.homogeneous(rng);
      return expect_equal(standard_bracket(ext.D(), F, G, n), standard_bracket(ext.D(), G, F, n) * sign, "standard");
    };
    t["0-bracket associativity"] = [&fx](Rng& rng, unsigned i) {
      const Extension& ext = fx.extensions[i % fx.extensions.size()];
      const Sampler base(ext.base(), 2), full(ext.extended(), 2);
      const GradedPoly f = base.homogeneous(rng), g = base.homogeneous(rng), h = base.homogeneous(rng);
      const auto& cd = ext.canonical();
      std::string e = expect_equal(canonical_bracket(cd, canonical_bracket(cd, f, g, 0), h, 0),
                                   canonical_bracket(cd, f, canonical_bracket(cd, g, h, 0), 0), "canonical");
      if (!e.empty()) return e;
      const GradedPoly F = full.homogeneous(rng), G = full.homogeneous(rng), H = full.homogeneous(rng);
      const Derivation& D = ext.D();
      return expect_equal(standard_bracket(D, standard_bracket(D, F, G, 0), H, 0),
                          standard_bracket(D, F, standard_bracket(D, G, H, 0), 0), "standard");
    };
    t["unit bracket"] = [&fx](Rng& rng, unsigned i) {
      const Extension& ext = fx.extensions[i % fx.extensions.size()];
      const Sampler base(ext.base(), 2);
      const GradedPoly f = base.homogeneous(rng), one = GradedPoly::constant(ext.base(), 1);
      const auto n = static_cast<unsigned>(uniform(rng, 0, 5));
      const GradedPoly expected = n == 0 ? f : GradedPoly(ext.base());
      std::string e = expect_equal(canonical_bracket(ext.canonical(), f, one, n), expected, "[f,1] canonical");
      if (e.empty()) {
        e = expect_equal(standard_bracket(ext.D(), ext.lift(f), ext.lift(one), n), ext.lift(expected),
                         "[f,1] standard");
      }
      return e;
    };
    t["1-bracket Jacobi"] = [&fx](Rng& rng, unsigned i) {
      const Extension& ext = fx.extensions[i % fx.extensions.size()];
      const Sampler full(ext.extended(), 2);
      const GradedPoly f = full.homogeneous(rng), g = full.homogeneous(rng), h = full.homogeneous(rng);
      const Derivation& D = ext.D();
      auto b = [&D](const GradedPoly& x, const GradedPoly& y) { return standard_bracket(D, x, y, 1); };
      return expect_equal(b(b(f, g), h) + b(b(g, h), f) + b(b(h, f), g), GradedPoly(ext.extended()), "Jacobi sum");
    };
    t["parse round-trip"] = [&fx](Rng& rng, unsigned i) {
      const AlgebraPtr alg = i % 2 == 0 ? fx.mixed : fx.loaded[i % fx.loaded.size()].second.algebra;
      const Sampler s(alg, 3);
      const GradedPoly f = s.poly(rng, 8);
      return expect_equal(parse_expr(format(f), alg), f, "parse(format(f))");
    };
    return t;
  }();
  return table;
}

}  // namespace

std::vector<std::string> names() {
  return {"ring laws",         "product oracle",    "serial/parallel agreement", "weight additivity",
          "homogeneous components", "Leibniz",      "derivation degree",         "weight eigenvalue",
          "commutator Leibniz", "bracket symmetry", "0-bracket associativity",   "unit bracket",
          "1-bracket Jacobi",  "parse round-trip"};
}

Outcome run(const std::string& name, std::uint64_t seed, unsigned cases) {
  const auto it = checks().find(name);
  if (it == checks().end()) throw std::invalid_argument("unknown property '" + name + "'");
  // One stream per property so that adding a property leaves the others unchanged.
  Rng rng(seed ^ fnv1a(name));
  Outcome out{name, 0, 0, {}};
  for (unsigned i = 0; i < cases; ++i) {
    std::string failure;
    try {
      failure = it->second(rng, i);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    ++out.cases;
    if (!failure.empty()) {
      if (out.failures == 0) out.first_failure = "case " + std::to_string(i) + ": " + failure;
      ++out.failures;
    }
  }
  return out;
}

}  // namespace props
