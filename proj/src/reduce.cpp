#include "formred/reduce.hpp"

#include "formred/errors.hpp"
#include "formred/roots.hpp"

#include <stdexcept>
#include <string>

namespace formred {

std::string_view to_string(Method m) {
    return m == Method::centroid ? "centroid" : "julia";
}

Method parse_method(std::string_view text) {
    if (text == "centroid" || text == "center") return Method::centroid;
    if (text == "julia") return Method::julia;
    throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

ZeroPointResult zero_point(const BinaryForm& form, Method method, const ReduceOptions& options) {
    const RootSet roots = root_set(form);
    ZeroPointResult out{roots.pairs.front(), std::nullopt};
    out.root_residual = roots.residual;
    if (method == Method::centroid) {
        out.point = center_of_mass_h2(roots.pairs);
        if (const auto factors = exact_quadratic_factors(form)) {
            out.exact = center_exact(*factors);
            if (out.exact) out.point = out.exact->point().approx();
        }
        out.center_residuals = center_system_residuals(roots.pairs, out.point);
    } else {
        const JuliaResult julia = julia_zero_real(roots, options.julia);
        out.point = julia.point_h2();
        out.gradient_norm = julia.gradient_norm;
        out.iterations = julia.iterations;
    }
    return out;
}

ReductionReport reduce_form(const BinaryForm& form, Method method, const ReduceOptions& options) {
    const ZeroPointResult first = zero_point(form, method, options);
    ReductionReport report{form,
                           method,
                           first.point,
                           first.exact,
                           UnimodularMatrix::identity(),
                           form,
                           first.point,
                           Rational(normalized_height(form)),
                           Rational(normalized_height(form)),
                           {},
                           {}};
    report.diagnostics.root_residual = first.root_residual;
    report.diagnostics.center_residuals = first.center_residuals;
    report.diagnostics.gradient_norm = first.gradient_norm;
    report.diagnostics.iterations = first.iterations;
    report.diagnostics.passes = 1;

    if (first.exact) {
        const auto exact = reduce_point_to_fundamental_domain(first.exact->point());
        report.matrix = exact.matrix;
        report.reduced = transform(form, exact.matrix);
        report.reduced_zero = exact.point.approx();
        report.path = reduce_point_to_fundamental_domain(first.point, options.boundary_tie).path;
        report.diagnostics.exact = true;
    } else {
        ZeroPointResult current = first;
        report.path.push_back(first.point);
        for (;;) {
            const auto step = reduce_point_to_fundamental_domain(current.point, options.boundary_tie);
            report.path.insert(report.path.end(), step.path.begin() + 1, step.path.end());
            if (step.matrix.projectively_equal(UnimodularMatrix::identity())) break;
            if (report.diagnostics.passes >= options.max_passes)
                throw ConvergenceFailure("zero point did not settle in the fundamental domain");
            report.matrix = report.matrix * step.matrix;
            report.reduced = transform(report.reduced, step.matrix);
            current = zero_point(report.reduced, method, options);
            ++report.diagnostics.passes;
        }
        report.reduced_zero = current.point;
    }
    report.height_after = Rational(normalized_height(report.reduced));
    return report;
}

ComparisonReport compare_methods(const BinaryForm& form, const ReduceOptions& options) {
    ComparisonReport out{reduce_form(form, Method::centroid, options), reduce_form(form, Method::julia, options)};
    out.zero_gap = dist_h2(out.centroid_report.zero_point, out.julia_report.zero_point);
    out.same_matrix = out.centroid_report.matrix.projectively_equal(out.julia_report.matrix);
    out.same_reduced_form = out.centroid_report.reduced == out.julia_report.reduced;
    return out;
}

bool is_reduced(const BinaryForm& form, Method method, double tol) {
    const ZeroPointResult zero = zero_point(form, method);
    if (zero.exact) return in_fundamental_domain(zero.exact->point());
    return in_fundamental_domain(zero.point, tol);
}

}  // namespace formred
