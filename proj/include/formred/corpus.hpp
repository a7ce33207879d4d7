#pragma once

// Seeded random forms and matrices for corpora and property tests.

#include "formred/forms.hpp"

#include <cstdint>
#include <random>

namespace formred {

using Rng = std::mt19937_64;

/// Number of distinct real roots of F(X, 1), by an exact Sturm sequence.
int count_real_roots(const BinaryForm& form);

/// Integer form of even degree in [min_degree, max_degree] with coefficients in
/// [-bound, bound], positive outer coefficients and no real roots
/// (rejection sampling on count_real_roots).
BinaryForm random_totally_complex_form(Rng& rng, int min_degree = 4, int max_degree = 8,
                                       std::int64_t bound = 10000);

/// Random SL2(Z) matrix with entries in [-bound, bound].
UnimodularMatrix random_unimodular(Rng& rng, std::int64_t bound);

}  // namespace formred
