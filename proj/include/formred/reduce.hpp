#pragma once

// End-to-end reduction: zero map, Gauss reduction of the zero point, the
// transformed form and its height.

#include "formred/centroid.hpp"
#include "formred/forms.hpp"
#include "formred/hyperbolic.hpp"
#include "formred/julia.hpp"

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace formred {

enum class Method { centroid, julia };

std::string_view to_string(Method m);
/// Accepts "centroid" / "center" and "julia". Throws std::invalid_argument otherwise.
Method parse_method(std::string_view text);

struct ReduceOptions {
    JuliaOptions julia;
    /// Zero points within this distance of the domain boundary take the
    /// canonical representative.
    double boundary_tie = 1e-9;
    int max_passes = 8;
};

struct ZeroPointResult {
    PointH2 point;
    std::optional<ExactCenter> exact;  ///< centroid with rational t and u^2
    double root_residual = 0.0;
    std::pair<double, double> center_residuals{0.0, 0.0};  ///< centroid only
    double gradient_norm = 0.0;                            ///< julia only
    int iterations = 0;                                    ///< julia only
};

/// Zero point of F for the chosen map. Throws RealRootDetected for forms with
/// a real root (including every odd degree) and ConvergenceFailure when the
/// Julia minimization does not certify.
ZeroPointResult zero_point(const BinaryForm& form, Method method, const ReduceOptions& options = {});

struct ReductionDiagnostics {
    double root_residual = 0.0;
    std::pair<double, double> center_residuals{0.0, 0.0};
    double gradient_norm = 0.0;
    int iterations = 0;
    int passes = 0;      ///< zero-map evaluations used
    bool exact = false;  ///< reduction carried out on an exact zero point
};

struct ReductionReport {
    BinaryForm input;
    Method method;
    PointH2 zero_point;
    std::optional<ExactCenter> exact_zero;
    UnimodularMatrix matrix;
    BinaryForm reduced;
    PointH2 reduced_zero;  ///< zero point of `reduced`, in the fundamental domain
    Rational height_before;  ///< normalized heights (primitive integral multiple)
    Rational height_after;
    std::vector<PointH2> path;  ///< Gauss-reduction path of the zero point
    ReductionDiagnostics diagnostics;
};

/// Finds M with zero(F) . M in the fundamental domain and returns F^M.
///
/// With an exact centroid the reduction is exact. Otherwise the zero point is
/// reduced numerically, the form transformed exactly, and the zero of the
/// transformed form recomputed until no further move is needed.
ReductionReport reduce_form(const BinaryForm& form, Method method, const ReduceOptions& options = {});

struct ComparisonReport {
    ReductionReport centroid_report;
    ReductionReport julia_report;
    double zero_gap = 0.0;  ///< d_H between the two zero points
    bool same_matrix = false;
    bool same_reduced_form = false;
};

ComparisonReport compare_methods(const BinaryForm& form, const ReduceOptions& options = {});

/// Whether the zero point lies in the closed fundamental domain (tolerance tol).
bool is_reduced(const BinaryForm& form, Method method, double tol = 1e-12);

}  // namespace formred
