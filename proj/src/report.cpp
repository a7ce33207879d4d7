#include "formred/report.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <sstream>

namespace formred {

namespace {

using BigReal = boost::multiprecision::cpp_bin_float_50;

BigReal to_big(const Rational& q) {
    return BigReal(q.get_num().get_str()) / BigReal(q.get_den().get_str());
}

std::string big_string(const BigReal& v, int digits) {
    std::ostringstream out;
    out.precision(digits);
    out << v;
    return out.str();
}

nlohmann::json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
    return v.get_str();
}

nlohmann::json rational_json(const Rational& q) {
    if (q.get_den() == 1) return integer_json(q.get_num());
    return q.get_str();
}

nlohmann::json point_json(const PointH2& p, int digits) {
    return {{"x", decimal_string(p.x, digits)}, {"y", decimal_string(p.y, digits)}};
}

// The part of m that is a square, m = s^2 k. Trial division only; a cofactor
// that is neither factored nor a perfect square stays inside k.
std::pair<Integer, Integer> split_square(Integer m) {
    Integer s = 1;
    Integer k = 1;
    for (unsigned long p = 2; p < 1000000 && Integer(p) * p <= m; ++p) {
        int e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= p;
            ++e;
        }
        for (int i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2 == 1) k *= p;
    }
    if (mpz_perfect_square_p(m.get_mpz_t())) {
        Integer r;
        mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
        s *= r;
    } else {
        k *= m;
    }
    return {s, k};
}

}  // namespace

std::string decimal_string(double value, int digits) {
    return big_string(BigReal(value), digits);
}

std::string rational_decimal_string(const Rational& q, int digits) {
    return big_string(to_big(q), digits);
}

std::string sqrt_decimal_string(const Rational& q, int digits) {
    return big_string(sqrt(to_big(q)), digits);
}

nlohmann::json to_json(const BinaryForm& form) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : form.coeffs()) coeffs.push_back(rational_json(c));
    return {{"coeffs", coeffs}, {"polynomial", to_polynomial_string(form)}};
}

nlohmann::json to_json(const UnimodularMatrix& m) {
    return nlohmann::json::array(
        {nlohmann::json::array({integer_json(m.a()), integer_json(m.b())}),
         nlohmann::json::array({integer_json(m.c()), integer_json(m.d())})});
}

nlohmann::json to_json(const ReductionReport& report, int digits) {
    nlohmann::json zero = point_json(report.zero_point, digits);
    nlohmann::json reduced_zero = point_json(report.reduced_zero, digits);
    if (report.exact_zero) {
        zero["x"] = rational_decimal_string(report.exact_zero->t, digits);
        zero["y"] = sqrt_decimal_string(report.exact_zero->u_squared, digits);
        zero["t_exact"] = report.exact_zero->t.get_str();
        zero["u_squared_exact"] = report.exact_zero->u_squared.get_str();
        const ExactPointH2 moved = mobius_exact(report.exact_zero->point(), report.matrix);
        reduced_zero["x"] = rational_decimal_string(moved.x, digits);
        reduced_zero["y"] = sqrt_decimal_string(moved.y_squared, digits);
        reduced_zero["t_exact"] = moved.x.get_str();
        reduced_zero["u_squared_exact"] = moved.y_squared.get_str();
    }
    const auto& d = report.diagnostics;
    return {
        {"schema_version", kSchemaVersion},
        {"method", std::string(to_string(report.method))},
        {"input", to_json(report.input)},
        {"zero_point", zero},
        {"matrix", to_json(report.matrix)},
        {"reduced", to_json(report.reduced)},
        {"reduced_zero", reduced_zero},
        {"height_before", rational_json(report.height_before)},
        {"height_after", rational_json(report.height_after)},
        {"diagnostics",
         {{"root_residual", d.root_residual},
          {"center_residuals", {d.center_residuals.first, d.center_residuals.second}},
          {"gradient_norm", d.gradient_norm},
          {"iterations", d.iterations},
          {"passes", d.passes},
          {"exact", d.exact}}},
    };
}

nlohmann::json to_json(const ComparisonReport& report, int digits) {
    return {
        {"schema_version", kSchemaVersion},
        {"centroid", to_json(report.centroid_report, digits)},
        {"julia", to_json(report.julia_report, digits)},
        {"zero_gap", report.zero_gap},
        {"same_matrix", report.same_matrix},
        {"same_reduced_form", report.same_reduced_form},
    };
}

std::string describe_exact_center(const ExactCenter& center) {
    std::string out = "t = " + center.t.get_str() + ", u = ";
    const Rational& q = center.u_squared;
    // u = sqrt(num * den) / den = (s / den) sqrt(k).
    const auto [s, k] = split_square(q.get_num() * q.get_den());
    Rational coefficient(s, q.get_den());
    coefficient.canonicalize();
    if (k == 1) return out + coefficient.get_str();
    const std::string root = "sqrt(" + k.get_str() + ")";
    if (coefficient == 1) return out + root;
    if (coefficient.get_den() == 1) return out + coefficient.get_str() + "*" + root;
    return out + "(" + coefficient.get_str() + ")*" + root;
}

}  // namespace formred
