#pragma once

// The Julia / Stoll-Cremona zero map. The zero of a form with roots alpha_i
// is the unique w0 in H3 minimizing
//
//     F~(w) = sum_i ln((|z - alpha_i|^2 + t^2) / t),   w = z + tj,
//
// the sum of boundary distances to the roots. At w0 the unit tangent vectors
// towards the roots sum to zero; the norm of that sum certifies convergence.

#include "formred/forms.hpp"
#include "formred/hyperbolic.hpp"
#include "formred/paramspace.hpp"
#include "formred/roots.hpp"

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace formred {

/// Nonnegative weights t_1..t_n, not all zero.
class BarycentricWeights {
public:
    /// Throws std::invalid_argument for negative entries or an all-zero vector.
    explicit BarycentricWeights(std::vector<double> t);

    const std::vector<double>& values() const { return t_; }
    std::size_t size() const { return t_.size(); }

private:
    std::vector<double> t_;
};

struct JuliaResult {
    PointH3 point;
    double objective = 0.0;      ///< F~ at the point
    double gradient_norm = 0.0;  ///< Riemannian norm of the tangent sum
    int iterations = 0;

    /// The point as an element of H2 (drops Im z, which is zero for real forms).
    PointH2 point_h2() const { return {point.z.real(), point.t}; }
};

struct JuliaOptions {
    double tol = 1e-10;
    int max_iterations = 200;
    std::optional<PointH3> start;
};

/// Q_F(t) = sum_i t_i |X - alpha_i Z|^2. Throws std::invalid_argument on size mismatch.
HermitianForm q_f(const BarycentricWeights& weights, std::span<const Complex> roots);

/// a0^2 disc(Q_F)^(n/2) / (n^n t_1 ... t_n).
/// Throws std::invalid_argument unless every t_i > 0, NotPositiveDefinite if disc <= 0.
double theta0(double a0, const BarycentricWeights& weights, std::span<const Complex> roots);

/// F~(w).
double julia_objective(const PointH3& w, std::span<const Complex> roots);

/// Riemannian gradient of F~ at w in the orthonormal frame (t d/du, t d/dv, t d/dt);
/// equal to minus the sum of the unit tangent vectors towards the roots.
std::array<double, 3> tangent_sum(const PointH3& w, std::span<const Complex> roots);

/// Minimizes F~ over H3 by damped Newton in (Re z, Im z, ln t), falling back to
/// gradient steps with Armijo backtracking. Needs at least two distinct roots,
/// none of multiplicity >= n/2 unless there are exactly two distinct roots of
/// equal multiplicity; in that case the minimizers form the geodesic between
/// them and its top point is returned.
/// Throws ConvergenceFailure when the tolerance is not met within the cap.
JuliaResult julia_zero(std::span<const Complex> roots, const JuliaOptions& options = {});

/// The same minimization restricted to H2 for a real form given by its
/// conjugate pairs (each pair contributes two roots). Starts at the
/// hyperbolic center of mass unless options.start is set.
JuliaResult julia_zero_real(const RootSet& roots, const JuliaOptions& options = {});

/// Monic quadratic whose zero is the Julia point of a real form with no real roots.
BinaryQuadratic julia_quadratic(const BinaryForm& form, const JuliaOptions& options = {});

/// Monic Hermitian form whose zero is the Julia point of the given roots.
HermitianForm julia_quadratic(std::span<const Complex> roots, const JuliaOptions& options = {});

}  // namespace formred
