#pragma once

#include "formred/forms.hpp"
#include "formred/hyperbolic.hpp"

#include <optional>
#include <span>
#include <vector>

namespace formred {

/// Upper-half-plane representatives of the conjugate root pairs of a real form.
struct RootSet {
    std::vector<PointH2> pairs;  ///< alpha_j = x_j + i y_j, sorted by (x, y), one per pair
    double residual = 0.0;       ///< max |F(alpha,1)| / (height * (1+|alpha|)^n) over all roots

    /// Every root, each pair expanded to alpha_j and its conjugate.
    std::vector<Complex> all_roots() const;
};

/// X^2 + a XZ + b Z^2 with floating coefficients; d = sqrt(4b - a^2).
struct NumericQuadraticFactor {
    double a = 0.0;
    double b = 0.0;

    double d() const;
    /// Root in the upper half-plane: (-a/2, d/2).
    PointH2 root() const;
};

/// Default realness threshold factor: |Im r| <= kRealnessThreshold * (1 + |r|) is real.
inline constexpr double kRealnessThreshold = 1e-8;

/// All n roots of F(X, 1) with multiplicity.
///
/// Multiplicities come from an exact squarefree decomposition over Q. Each
/// squarefree part is solved by Aberth-Ehrlich iteration started on a circle
/// of Cauchy-bound radius and polished by Newton steps in 50-digit arithmetic.
/// Throws RealRootDetected when c_0 == 0 (a root at infinity) and
/// ConvergenceFailure when the residual check fails.
std::vector<Complex> complex_roots(const BinaryForm& form, double tol = 1e-12);

/// Groups roots of a real form into conjugate pairs.
/// Throws RealRootDetected if a root is within the realness threshold of the
/// real axis and UnpairedRoot if some root has no conjugate within tol * (1+|root|).
RootSet pair_conjugates(std::span<const Complex> roots, double tol = 1e-7);

/// complex_roots followed by pair_conjugates, with the residual filled in.
RootSet root_set(const BinaryForm& form);

/// (a_j, b_j) = (-2 x_j, x_j^2 + y_j^2) for every conjugate pair.
std::vector<NumericQuadraticFactor> real_quadratic_factors(const BinaryForm& form);
std::vector<NumericQuadraticFactor> real_quadratic_factors(const RootSet& roots);

/// Rational factors X^2 + a_j XZ + b_j Z^2 with F = c_0 * prod_j factor_j,
/// when the numeric factors round to small-denominator rationals whose exact
/// product reproduces F. Otherwise nullopt.
std::optional<std::vector<QuadraticFactor>> exact_quadratic_factors(const BinaryForm& form);

}  // namespace formred
