#include "rcalg/verify.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "rcalg/algebra_file.hpp"
#include "rcalg/ck_series.hpp"
#include "rcalg/errors.hpp"
#include "rcalg/expr.hpp"
#include "rcalg/qseries.hpp"
#include "rcalg/rrc.hpp"

namespace rcalg {
namespace {

struct Task {
  std::string name;
  std::function<std::vector<CheckResult>()> run;
};

std::vector<CheckResult> single(const std::string& name, bool pass, std::string detail = {}) {
  return {CheckResult{name, pass, std::move(detail)}};
}

std::vector<CheckResult> run_tasks(const std::vector<Task>& tasks, Exec exec) {
  std::vector<std::vector<CheckResult>> results(tasks.size());
  const auto count = static_cast<long>(tasks.size());
  auto run_one = [&](long i) {
    try {
      results[i] = tasks[i].run();
    } catch (const std::exception& e) {
      results[i] = single(tasks[i].name, false, std::string("exception: ") + e.what());
    }
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) run_one(i);
  } else {
    for (long i = 0; i < count; ++i) run_one(i);
  }
  std::vector<CheckResult> out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::string join_indices(const std::vector<unsigned>& v) {
  std::string s;
  for (unsigned x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

bool has_weight(const GradedPoly& f, const Rational& w) {
  const Homogeneity h = weight_of(f);
  return h.kind == Homogeneity::Kind::Zero || (h.kind == Homogeneity::Kind::Homogeneous && h.weight == w);
}

struct Subject {
  std::string label;
  LoadedAlgebra loaded;
  unsigned n;
  std::vector<GradedPoly> elements;  // over the base algebra
};

const Extension& require_extension(const Subject& s) {
  if (!s.loaded.extension) throw PreconditionError("'" + s.label + "' carries no canonical data");
  return *s.loaded.extension;
}

std::vector<GradedPoly> base_elements(const Extension& ext, const std::vector<std::string>& texts) {
  std::vector<GradedPoly> out;
  for (const auto& t : texts) out.push_back(parse_expr(t, ext.base()));
  return out;
}

// All base generators followed by the product of the first two.
std::vector<GradedPoly> default_elements(const Extension& ext) {
  const AlgebraPtr& base = ext.base();
  std::vector<GradedPoly> out;
  for (std::size_t i = 0; i < base->size(); ++i) out.push_back(GradedPoly::generator(base, base->name(i)));
  if (out.size() >= 2) out.push_back(out[0] * out[1]);
  return out;
}

Subject subject(const std::string& name, std::optional<unsigned> n, unsigned default_n,
                const std::optional<std::vector<std::string>>& elements = std::nullopt) {
  Subject s{name, load_algebra(name), n.value_or(default_n), {}};
  if (s.loaded.extension) {
    s.elements = elements ? base_elements(*s.loaded.extension, *elements) : default_elements(*s.loaded.extension);
  }
  return s;
}

// ---------------------------------------------------------------- thm-main1

void thm_main1_tasks(const Subject& s, Exec inner, std::vector<Task>& tasks) {
  const Extension& ext = require_extension(s);
  for (const auto& f : s.elements) {
    for (const auto& g : s.elements) {
      const std::string pair = s.label + ": [" + format(f) + ", " + format(g) + "]";
      tasks.push_back({pair, [&ext, f, g, n = s.n, pair, inner] {
                         std::vector<unsigned> bad;
                         for (const auto& c : verify_bracket_equality(ext, f, g, n, inner)) {
                           if (!c.equal) bad.push_back(c.n);
                         }
                         return single(pair + "_n canonical = standard, n <= " + std::to_string(n), bad.empty(),
                                       bad.empty() ? "" : "differs at n = " + join_indices(bad));
                       }});
      const Rational k = require_weight(f, "thm-main1"), l = require_weight(g, "thm-main1");
      if (!(is_integer(k) && is_integer(l) && sgn(k) < 0 && sgn(l) < 0)) continue;
      const long hi = std::max(to_long(k), to_long(l)), lo = std::min(to_long(k), to_long(l));
      std::vector<unsigned> window;
      for (unsigned n = 0; n <= s.n; ++n) {
        if (!bracket_support_window(hi, lo, n)) window.push_back(n);
      }
      if (window.empty()) continue;
      tasks.push_back({pair, [&ext, f, g, window, pair, inner] {
                         std::vector<unsigned> bad;
                         for (unsigned n : window) {
                           const bool zero = canonical_bracket(ext.canonical(), f, g, n, inner).is_zero() &&
                                             standard_bracket(ext.D(), ext.lift(f), ext.lift(g), n, inner).is_zero();
                           if (!zero) bad.push_back(n);
                         }
                         return single(pair + "_n vanishes for n in {" + join_indices(window) + "}", bad.empty(),
                                       bad.empty() ? "" : "nonzero at n = " + join_indices(bad));
                       }});
    }
  }
  std::vector<GradedPoly> expanded = s.elements;
  expanded.push_back(ext.e2());
  for (const auto& f : expanded) {
    const std::string label = s.label + ": E2 expansion of d_(n) " + format(f);
    tasks.push_back({label, [&ext, f, n_max = std::min(s.n, 6U), label] {
                       const bool is_e2 = f.algebra() == ext.extended();
                       const CanonicalData& cd = is_e2 ? ext.extended_canonical() : ext.canonical();
                       const auto iterates = canonical_iterates(cd, f, n_max);
                       std::vector<unsigned> bad;
                       for (unsigned n = 0; n <= n_max; ++n) {
                         const GradedPoly lhs = iterates[n].in(ext.extended());
                         bool ok = lhs == e2_expansion(ext, f, n);
                         if (!is_e2) ok = ok && lhs == e2_expansion_by_cases(ext, f, n);
                         if (!ok) bad.push_back(n);
                       }
                       return single(label + ", n <= " + std::to_string(n_max), bad.empty(),
                                     bad.empty() ? "" : "differs at n = " + join_indices(bad));
                     }});
  }
}

// ---------------------------------------------------------------- kk

void kk_tasks(const Subject& s, Exec inner, std::vector<Task>& tasks) {
  const Extension& ext = require_extension(s);
  auto profile_ok = [&ext](const GradedPoly& t) {
    const auto p = e2_profile(t, ext);
    return p.empty() || (p.size() == 1 && p.begin()->first == 0);
  };
  for (const auto& f : s.elements) {
    const Rational k = require_weight(f, "kk");
    for (unsigned n = 0; n <= s.n; ++n) {
      const std::string label = s.label + ": theta^(" + std::to_string(n) + ") " + format(f);
      tasks.push_back({label, [&ext, f, k, n, label, inner, profile_ok] {
                         const GradedPoly t = kk_theta_f(ext, f, n, inner);
                         return std::vector<CheckResult>{
                             {label + " lies in M", profile_ok(t), {}},
                             {label + " has weight " + to_string(k + 2 + 2 * n), has_weight(t, k + 2 + 2 * n), {}},
                             {label + " matches its closed form", t == kk_theta_f_closed_form(ext, f, n), {}}};
                       }});
    }
  }
  for (unsigned n = 0; n <= s.n; ++n) {
    const std::string label = s.label + ": theta^(" + std::to_string(n) + ") " + ext.e2_name();
    tasks.push_back({label, [&ext, n, label, inner, profile_ok] {
                       const GradedPoly t = kk_theta_e2(ext, n, inner);
                       std::vector<CheckResult> out{
                           {label + " lies in M", profile_ok(t), {}},
                           {label + " has weight " + std::to_string(4 + 2 * n), has_weight(t, Rational(4 + 2 * n)), {}},
                           {label + " matches its closed form", t == kk_theta_e2_closed_form(ext, n), {}}};
                       if (n % 2 == 1) out.push_back({label + " vanishes", t.is_zero(), t.is_zero() ? "" : format(t)});
                       return out;
                     }});
  }
}

// ---------------------------------------------------------------- ck

void ck_tasks(const Subject& s, unsigned order, std::vector<Task>& tasks) {
  const Extension& ext = require_extension(s);
  std::vector<GradedPoly> elements;
  for (const auto& f : s.elements) elements.push_back(ext.lift(f));
  elements.push_back(ext.e2());
  for (const auto& f : elements) {
    const std::string label = s.label + ": CK series of " + format(f) + " (weight " +
                              to_string(require_weight(f, "ck")) + ")";
    tasks.push_back({label, [&ext, f, order, label] {
                       std::vector<CheckResult> out;
                       for (const auto& c : verify_ck_twist(ext, f, order)) {
                         out.push_back({label + ": " + c.name, c.holds, c.detail});
                       }
                       return out;
                     }});
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      const GradedPoly f = elements[i], g = elements[j];
      const std::string label = s.label + ": CK(" + format(f) + "; -X) CK(" + format(g) + "; X)";
      tasks.push_back({label, [&ext, f, g, order, label] {
                         std::vector<CheckResult> out;
                         for (const auto& c : verify_ck_products(ext, f, g, order)) {
                           out.push_back({label + ": " + c.name, c.holds, c.detail});
                         }
                         return out;
                       }});
    }
  }
}

// ---------------------------------------------------------------- psi

void psi_tasks(const Subject& s, Exec inner, std::vector<Task>& tasks) {
  const Extension& ext = require_extension(s);
  const GradedPoly E2 = ext.e2();
  for (unsigned n = 0; n <= s.n; ++n) {
    const std::string label = s.label + ": Psi_" + std::to_string(n);
    tasks.push_back({label, [&ext, E2, n, label, prefix = s.label] {
                       const GradedPoly psi = ext.psi(n);
                       const GradedPoly iterate = canonical_iterate(ext.extended_canonical(), E2, n);
                       GradedPoly rest = iterate - E2.pow(n + 1) * Rational(factorial(n) * sign_power(n));
                       const bool free = ext.in_base(rest);
                       std::vector<CheckResult> out{
                           {label + " has weight " + std::to_string(2 * n + 2), has_weight(psi, Rational(2 * n + 2)), {}},
                           {label + " = d_(n) E2 - (-1)^n n! E2^(n+1), free of E2", free && rest == ext.lift(psi),
                            free ? "" : "remainder involves E2"},
                           {prefix + ": D^" + std::to_string(n + 1) + " E2 closed form",
                            ext.D().iterate(E2, n + 1) == d_power_e2_closed_form(ext, n), {}}};
                       if (n <= 6) {
                         out.push_back({prefix + ": d_(" + std::to_string(n) + ") E2 through D^j E2",
                                        iterate == e2_expansion(ext, E2, n), {}});
                       }
                       return out;
                     }});
  }
  if (ext.base()->size() > 0) {
    const GradedPoly f = ext.lift(GradedPoly::generator(ext.base(), ext.base()->name(0)));
    const std::string label = s.label + ": brackets with E2 transfer to d_(j)";
    tasks.push_back({label, [&ext, E2, f, n_max = std::min(s.n, 6U), label, inner] {
                       std::vector<unsigned> bad;
                       for (unsigned n = 0; n <= n_max; ++n) {
                         const auto& cd = ext.extended_canonical();
                         const bool ok =
                             standard_bracket(ext.D(), E2, f, n, inner) == canonical_bracket(cd, E2, f, n, inner) &&
                             standard_bracket(ext.D(), E2, E2, n, inner) == canonical_bracket(cd, E2, E2, n, inner);
                         if (!ok) bad.push_back(n);
                       }
                       return single(label + " for [E2, " + format(f) + "] and [E2, E2], n <= " + std::to_string(n_max),
                                     bad.empty(), bad.empty() ? "" : "differs at n = " + join_indices(bad));
                     }});
  }
}

// ---------------------------------------------------------------- sl2 / rrc-shape / relation

void sl2_tasks(const std::string& name, std::vector<Task>& tasks) {
  tasks.push_back({name + ": sl2 triple", [name] {
                     const LoadedAlgebra loaded = load_algebra(name);
                     if (!loaded.delta) return single(name + ": sl2 triple", false, "no delta available");
                     const Sl2Report report = check_sl2_triple(loaded.D, Derivation::weight(loaded.algebra), *loaded.delta);
                     std::vector<std::string> relations;
                     std::map<std::string, std::string> failures;
                     for (const auto& c : report.checks) {
                       if (std::find(relations.begin(), relations.end(), c.relation) == relations.end()) {
                         relations.push_back(c.relation);
                       }
                       if (!c.holds) failures[c.relation] += c.generator + ": " + c.detail + "; ";
                     }
                     std::vector<CheckResult> out;
                     for (const auto& r : relations) {
                       out.push_back({name + ": " + r + " on every generator", !failures.count(r),
                                      failures.count(r) ? failures[r] : ""});
                     }
                     return out;
                   }});
}

const std::vector<std::pair<std::string, std::string>> kMirrorPairs = {
    {"t1", "t3"}, {"t1", "t5"}, {"t3", "t4"}, {"t4", "t6"},    {"t5", "t8"},
    {"t6", "t7"}, {"t7", "t4"}, {"t1", "t1"}, {"t1*t3", "t5"}, {"t4*t6", "t8"}};

void rrc_tasks(const std::string& name, std::optional<unsigned> max_n, Exec inner, std::vector<Task>& tasks) {
  tasks.push_back({name + ": RRC shape", [name, max_n, inner] {
                     const LoadedAlgebra loaded = load_algebra(name);
                     if (!loaded.e2) return single(name + ": RRC shape", false, "no generator in the t1 role");
                     const RrcCertificate cert = certify_rrc(loaded.D, *loaded.e2);
                     std::string why;
                     for (const auto& v : cert.violations) why += v.generator + ": " + v.reason + "; ";
                     std::vector<CheckResult> out{{name + ": RRC shape with t1 = " + *loaded.e2, cert.certified(), why}};
                     if (!cert.certified()) return out;
                     const RrcSystem& sys = *cert.system;

                     const CanonicalData cd = strip(sys);
                     out.push_back({name + ": rebuilding from the stripped canonical data gives the system back",
                                    equivalent(from_canonical(cd, sys.t1_name()), sys), {}});

                     // Brackets of the stripped data agree with those of D.
                     const Extension ext = Extension::build(cd, sys.t1_name());
                     const AlgebraPtr& base = ext.base();
                     const unsigned n_eq = max_n.value_or(4);
                     std::vector<std::string> bad;
                     for (std::size_t i = 0; i < base->size(); ++i) {
                       const std::size_t j = (i + 1) % base->size();
                       const GradedPoly f = GradedPoly::generator(base, base->name(i));
                       const GradedPoly g = GradedPoly::generator(base, base->name(j));
                       for (const auto& c : verify_bracket_equality(ext, f, g, n_eq, inner)) {
                         if (!c.equal) bad.push_back(base->name(i) + "," + base->name(j) + " n=" + std::to_string(c.n));
                       }
                     }
                     std::string detail;
                     for (const auto& b : bad) detail += b + "; ";
                     out.push_back({name + ": stripped canonical brackets equal D-brackets, n <= " + std::to_string(n_eq),
                                    bad.empty(), detail});

                     // Closure of E2-free elements under the D-brackets.
                     std::vector<std::pair<std::string, std::string>> pairs;
                     if (name == "mirror_quintic") {
                       pairs = kMirrorPairs;
                     } else {
                       for (std::size_t i = 0; i < base->size(); ++i) {
                         for (std::size_t j = i; j < base->size(); ++j) pairs.emplace_back(base->name(i), base->name(j));
                       }
                     }
                     const unsigned n_cl = max_n.value_or(3);
                     bad.clear();
                     for (const auto& [fs, gs] : pairs) {
                       const GradedPoly f = parse_expr(fs, sys.algebra), g = parse_expr(gs, sys.algebra);
                       for (unsigned n = 0; n <= n_cl; ++n) {
                         const GradedPoly b = reduce_mod_relations(standard_bracket(sys.D, f, g, n, inner));
                         if (b.mentions(sys.t1)) bad.push_back("[" + fs + "," + gs + "]_" + std::to_string(n));
                       }
                     }
                     detail.clear();
                     for (const auto& b : bad) detail += b + " ";
                     out.push_back({name + ": brackets of " + std::to_string(pairs.size()) + " pairs free of " +
                                        sys.t1_name() + ", n <= " + std::to_string(n_cl),
                                    bad.empty(), detail});
                     return out;
                   }});
}

void relation_tasks(const std::string& name, std::vector<Task>& tasks) {
  tasks.push_back({name + ": relations", [name] {
                     const LoadedAlgebra loaded = load_algebra(name);
                     const AlgebraPtr& alg = loaded.algebra;
                     if (alg->num_relations() == 0) return single(name + ": no relations to preserve", true);
                     std::vector<CheckResult> out;
                     std::vector<std::pair<std::string, Derivation>> ds{{"D", loaded.D},
                                                                         {"W", Derivation::weight(alg)}};
                     if (loaded.delta) ds.emplace_back("delta", *loaded.delta);
                     for (const auto& R : alg->relations()) {
                       for (const auto& [dn, d] : ds) {
                         const GradedPoly r = reduce_mod_relations(d.apply(R));
                         out.push_back({name + ": " + dn + "(" + format(R) + ") = 0 modulo the relations", r.is_zero(),
                                        r.is_zero() ? "" : format(r)});
                       }
                     }
                     return out;
                   }});
}

// ---------------------------------------------------------------- ramanujan

std::vector<CheckResult> q_derivative_checks(const std::string& name, const Assignment& asg) {
  const LoadedAlgebra loaded = load_algebra(name);
  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < loaded.algebra->size(); ++i) {
    const std::string& t = loaded.algebra->name(i);
    const QSeries lhs = evaluate(*loaded.D.image(i), asg, Exec::Serial);
    const QSeries rhs = asg.at(t).theta();
    out.push_back({name + ": D(" + t + ") agrees with q d/dq through q^" + std::to_string(asg.at(t).order()),
                   lhs == rhs, {}});
  }
  return out;
}

void ramanujan_tasks(unsigned order, const std::optional<std::string>& algebra, std::vector<Task>& tasks) {
  tasks.push_back({"Eisenstein series", [order] {
                     std::vector<CheckResult> out;
                     for (const auto& c : check_ramanujan(order)) {
                       out.push_back({c.name + " through q^" + std::to_string(order), c.holds, c.detail});
                     }
                     return out;
                   }});
  const std::vector<std::string> names =
      algebra ? std::vector<std::string>{*algebra} : std::vector<std::string>{"ramanujan", "ramanujan_rescaled", "classical"};
  for (const auto& name : names) {
    tasks.push_back({name, [name, order] {
                       const QSeries E2 = eisenstein(2, order), E4 = eisenstein(4, order), E6 = eisenstein(6, order);
                       Assignment asg;
                       if (name == "ramanujan") {
                         asg = {{"t1", E2}, {"t2", E4}, {"t3", E6}};
                       } else if (name == "ramanujan_rescaled") {
                         asg = {{"t1", E2 * Rational(1, 12)}, {"t2", E4}, {"t3", E6}};
                       } else if (name == "classical") {
                         asg = classical_assignment(order);
                       } else {
                         throw ValidationError("no q-expansion assignment is known for '" + name + "'");
                       }
                       return q_derivative_checks(name, asg);
                     }});
  }
}

std::vector<std::string> names_or(const std::optional<std::string>& algebra, std::vector<std::string> defaults) {
  return algebra ? std::vector<std::string>{*algebra} : defaults;
}

}  // namespace

bool SuiteReport::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"thm-main1", "kk",  "ck",       "psi",
                                                 "sl2",       "rrc-shape", "relation", "ramanujan"};
  return names;
}

const std::vector<std::pair<std::string, std::string>>& mirror_closure_pairs() { return kMirrorPairs; }

SuiteReport run_suite(const std::string& suite, const VerifyOptions& options) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw ValidationError("unknown suite '" + suite + "'");
  }
  const Exec inner = options.exec;
  const auto& alg = options.algebra;
  std::vector<Subject> subjects;  // referenced by the tasks; must outlive them
  std::vector<Task> tasks;

  if (suite == "thm-main1" || suite == "kk" || suite == "ck" || suite == "psi") {
    struct Default {
      std::string name;
      unsigned n;
      std::optional<std::vector<std::string>> elements;
    };
    std::vector<Default> defaults;
    if (suite == "thm-main1") {
      defaults = {{"classical", 6, std::nullopt}, {"negweights", 10, std::nullopt}, {"fracweights", 6, std::nullopt}};
    } else if (suite == "kk") {
      defaults = {{"classical", 5, std::vector<std::string>{"E4", "E6"}},
                  {"negweights", 5, std::vector<std::string>{"a", "b"}}};
    } else if (suite == "ck") {
      defaults = {{"negweights", 0, std::vector<std::string>{"c", "b", "a", "a*u", "u", "u^2", "u^3"}},
                  {"fracweights", 0, std::vector<std::string>{"h", "g"}}};
    } else {
      defaults = {{"classical", 8, std::nullopt}, {"negweights", 8, std::nullopt}};
    }
    if (alg) {
      const Default d = defaults.front();
      subjects.push_back(subject(*alg, options.max_n, d.n));
      if (suite == "kk" && subjects.back().elements.size() > 2) subjects.back().elements.erase(subjects.back().elements.begin() + 2, subjects.back().elements.end());
    } else {
      for (const auto& d : defaults) subjects.push_back(subject(d.name, options.max_n, d.n, d.elements));
    }
    for (auto& s : subjects) require_extension(s);
    for (const auto& s : subjects) {
      if (suite == "thm-main1") thm_main1_tasks(s, inner, tasks);
      if (suite == "kk") kk_tasks(s, inner, tasks);
      if (suite == "ck") ck_tasks(s, options.order.value_or(options.max_n.value_or(8)), tasks);
      if (suite == "psi") psi_tasks(s, inner, tasks);
    }
    if (suite == "psi") {
      const unsigned n_max = std::max(12U, options.max_n.value_or(0));
      tasks.push_back({"binomial identity", [n_max] {
                         std::vector<unsigned> bad;
                         for (unsigned n = 0; n <= n_max; ++n) {
                           if (d_power_binomial_sum(n) != factorial(n + 1)) bad.push_back(n);
                         }
                         return single("sum_j (-1)^j (n+1)!(n+2)!/((j+1)!(n+1-j)!) = (n+1)!, n <= " +
                                           std::to_string(n_max),
                                       bad.empty(), bad.empty() ? "" : "fails at n = " + join_indices(bad));
                       }});
    }
  } else if (suite == "sl2") {
    for (const auto& n : names_or(alg, {"mirror_quintic", "ramanujan", "ramanujan_rescaled", "classical"})) {
      sl2_tasks(n, tasks);
    }
  } else if (suite == "rrc-shape") {
    for (const auto& n : names_or(alg, {"mirror_quintic", "ramanujan_rescaled", "classical"})) {
      rrc_tasks(n, options.max_n, inner, tasks);
    }
  } else if (suite == "relation") {
    for (const auto& n : names_or(alg, {"mirror_quintic"})) relation_tasks(n, tasks);
  } else {
    ramanujan_tasks(options.order.value_or(50), alg, tasks);
  }
  return SuiteReport{suite, run_tasks(tasks, options.exec)};
}

nlohmann::ordered_json report_to_json(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["pass"] = report.pass();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
  }
  return j;
}

std::string report_to_text(const SuiteReport& report) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& c : report.checks) {
    passed += c.pass ? 1 : 0;
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << "  [" << c.detail << "]";
    out << '\n';
  }
  out << "suite " << report.suite << ": " << passed << "/" << report.checks.size() << " checks passed\n";
  return out.str();
}

}  // namespace rcalg
