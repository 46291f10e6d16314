#include "rcalg/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rcalg::kernels {
namespace {

bool run_parallel(Exec exec, std::size_t work) {
#ifdef _OPENMP
  return exec == Exec::Parallel && work >= kMinParallelWork && !omp_in_parallel() && omp_get_max_threads() > 1;
#else
  (void)exec;
  (void)work;
  return false;
#endif
}

TermList merge_all(std::vector<TermList>& parts) {
  // Pairwise tree reduction keeps merge cost at O(total * log(parts)).
  while (parts.size() > 1) {
    std::vector<TermList> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(merge_add(parts[i], parts[i + 1]));
    if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return parts.empty() ? TermList{} : std::move(parts.front());
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void canonicalize(TermList& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first > y.first; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < terms.size();) {
    std::size_t s = r + 1;
    while (s < terms.size() && terms[s].first == terms[r].first) {
      terms[r].second += terms[s].second;
      ++s;
    }
    if (sgn(terms[r].second) != 0) {
      if (w != r) terms[w] = std::move(terms[r]);
      ++w;
    }
    r = s;
  }
  terms.resize(w);
}

TermList merge_add(const TermList& a, const TermList& b) {
  TermList out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = a[i].first <=> b[j].first;
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      Rational s = a[i].second + b[j].second;
      if (sgn(s) != 0) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return out;
}

TermList accumulate(std::size_t count, std::size_t work, const TermProducer& produce, Exec exec) {
  if (!run_parallel(exec, work) || count < 2) {
    TermList out;
    out.reserve(work);
    for (std::size_t i = 0; i < count; ++i) produce(i, out);
    canonicalize(out);
    return out;
  }
  std::vector<TermList> parts;
#ifdef _OPENMP
  const auto chunks = static_cast<std::size_t>(std::min<std::size_t>(count, 4 * static_cast<std::size_t>(max_threads())));
  parts.resize(chunks);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t c = 0; c < chunks; ++c) {
    TermList& local = parts[c];
    for (std::size_t i = c; i < count; i += chunks) produce(i, local);
    canonicalize(local);
  }
#endif
  return merge_all(parts);
}

TermList multiply(std::span<const Term> a, std::span<const Term> b, Exec exec) {
  if (a.size() < b.size()) std::swap(a, b);
  return accumulate(
      a.size(), a.size() * b.size(),
      [&](std::size_t i, TermList& out) {
        for (const auto& [mb, cb] : b) out.emplace_back(a[i].first * mb, a[i].second * cb);
      },
      exec);
}

std::vector<Rational> convolve(std::span<const Rational> a, std::span<const Rational> b, std::size_t len,
                               Exec exec) {
  std::vector<Rational> out(len);
  auto coefficient = [&](std::size_t n) {
    Rational s = 0;
    const std::size_t lo = n >= b.size() ? n - b.size() + 1 : 0;
    const std::size_t hi = std::min(n, a.size() ? a.size() - 1 : 0);
    if (a.empty() || b.empty()) return s;
    for (std::size_t i = lo; i <= hi; ++i) {
      if (sgn(a[i]) != 0 && sgn(b[n - i]) != 0) s += a[i] * b[n - i];
    }
    return s;
  };
  if (!run_parallel(exec, len * std::min(a.size(), b.size()))) {
    for (std::size_t n = 0; n < len; ++n) out[n] = coefficient(n);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t n = 0; n < len; ++n) out[n] = coefficient(n);
  return out;
}

}  // namespace rcalg::kernels
