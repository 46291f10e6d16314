#pragma once

// Term-accumulation kernels. Every kernel has a serial reference path and an
// OpenMP path; both produce identical canonical term lists.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "rcalg/algebra.hpp"

namespace rcalg::kernels {

// Below this many elementary term products the parallel path runs serially.
inline constexpr std::size_t kMinParallelWork = 2048;

int max_threads();

// Sorts by decreasing monomial, merges duplicates, drops zeros.
void canonicalize(TermList& terms);

// Sum of two canonical term lists.
TermList merge_add(const TermList& a, const TermList& b);

// Emits the raw (non-canonical) terms contributed by item `i` into `out`.
using TermProducer = std::function<void(std::size_t i, TermList& out)>;

// Canonical sum of the contributions of items [0, count). `work` estimates
// the total number of emitted terms and gates the parallel path.
TermList accumulate(std::size_t count, std::size_t work, const TermProducer& produce, Exec exec);

TermList multiply(std::span<const Term> a, std::span<const Term> b, Exec exec);

// Truncated Cauchy product: out[n] = sum_{i+j=n} a[i] b[j], n < len.
std::vector<Rational> convolve(std::span<const Rational> a, std::span<const Rational> b, std::size_t len,
                               Exec exec);

}  // namespace rcalg::kernels
