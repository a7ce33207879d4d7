#include "formred/centroid.hpp"

#include "formred/errors.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace formred {

namespace {

void check_psi_inputs(std::size_t nx, std::size_t ny) {
    if (nx != ny) throw std::invalid_argument("psi: length mismatch");
    if (nx == 0) throw std::invalid_argument("psi: empty input");
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
    Integer num, den;
    mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
    Rational out(num, den);
    out.canonicalize();
    return out;
}

}  // namespace

double psi(std::span<const double> x, std::span<const double> y) {
    check_psi_inputs(x.size(), y.size());
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(y[i] > 0.0)) throw std::invalid_argument("psi: weights need y_i > 0");
        num += x[i] / y[i];
        den += 1.0 / y[i];
    }
    return num / den;
}

Rational psi(std::span<const Rational> x, std::span<const Rational> y) {
    check_psi_inputs(x.size(), y.size());
    Rational num = 0;
    Rational den = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (y[i] <= 0) throw std::invalid_argument("psi: weights need y_i > 0");
        num += x[i] / y[i];
        den += 1 / y[i];
    }
    Rational out = num / den;
    out.canonicalize();
    return out;
}

std::vector<double> psi_weights(std::span<const double> y) {
    std::vector<double> w(y.size());
    double total = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!(y[i] > 0.0)) throw std::invalid_argument("psi: weights need y_i > 0");
        w[i] = 1.0 / y[i];
        total += w[i];
    }
    for (auto& v : w) v /= total;
    return w;
}

double q_of_t(double t, double x_j, double y_j) {
    const double dx = t - x_j;
    return dx * dx + y_j * y_j;
}

PointH2 center_of_mass_h2(std::span<const PointH2> points) {
    if (points.empty()) throw std::invalid_argument("center of mass of an empty set");
    std::vector<double> xs, ys;
    for (const auto& p : points) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    const double t = psi(xs, ys);
    std::vector<double> qs;
    for (const auto& p : points) qs.push_back(q_of_t(t, p.x, p.y));
    return {t, std::sqrt(psi(qs, ys))};
}

std::pair<double, double> center_system_residuals(std::span<const PointH2> points, const PointH2& center) {
    double first = 0.0;
    double second = 0.0;
    const double u2 = center.y * center.y;
    for (const auto& p : points) {
        first += (center.x - p.x) / p.y;
        second += (u2 - q_of_t(center.x, p.x, p.y)) / p.y;
    }
    return {first, second};
}

double sum_cosh_distances(std::span<const PointH2> points, const PointH2& w) {
    double total = 0.0;
    for (const auto& p : points) total += std::cosh(dist_h2(w, p));
    return total;
}

std::optional<ExactCenter> center_exact(std::span<const ExactPointH2> points) {
    if (points.empty()) throw std::invalid_argument("center of mass of an empty set");
    std::vector<Rational> xs, ys;
    for (const auto& p : points) {
        const auto y = rational_sqrt(p.y_squared);
        if (!y || *y == 0) return std::nullopt;
        xs.push_back(p.x);
        ys.push_back(*y);
    }
    ExactCenter out;
    out.t = psi(xs, ys);
    std::vector<Rational> qs;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        const Rational dx = out.t - xs[j];
        qs.push_back(dx * dx + ys[j] * ys[j]);
    }
    out.u_squared = psi(qs, ys);
    return out;
}

std::optional<ExactCenter> center_exact(std::span<const QuadraticFactor> factors) {
    std::vector<ExactPointH2> points;
    for (const auto& f : factors) {
        Rational x = -f.a / 2;
        Rational y2 = f.discriminant_gap() / 4;
        x.canonicalize();
        y2.canonicalize();
        points.push_back({x, y2});
    }
    return center_exact(points);
}

PointH2 center_from_quadratic_factors(std::span<const NumericQuadraticFactor> factors) {
    if (factors.empty()) throw std::invalid_argument("no quadratic factors");
    std::vector<double> as, bs, ds;
    for (const auto& f : factors) {
        if (!(4.0 * f.b - f.a * f.a > 0.0)) throw RealRootDetected("quadratic factor has real roots");
        as.push_back(f.a);
        bs.push_back(f.b);
        ds.push_back(f.d());
    }
    const double psi_a = psi(as, ds);
    const double u2 = psi(bs, ds) - 0.25 * psi_a * psi_a;
    if (!(u2 > 0.0)) throw ConvergenceFailure("center height underflowed; use the root formula");
    return {-0.5 * psi_a, std::sqrt(u2)};
}

PointH2 center_from_quadratic_factors(std::span<const QuadraticFactor> factors) {
    std::vector<NumericQuadraticFactor> numeric;
    for (const auto& f : factors) {
        if (f.discriminant_gap() <= 0) throw RealRootDetected("quadratic factor has real roots");
        numeric.push_back({f.a.get_d(), f.b.get_d()});
    }
    return center_from_quadratic_factors(numeric);
}

PointH2 alt_center_presentation(std::span<const NumericQuadraticFactor> factors) {
    const std::size_t r = factors.size();
    if (r == 0) throw std::invalid_argument("no quadratic factors");
    std::vector<double> d(r);
    for (std::size_t i = 0; i < r; ++i) {
        if (!(4.0 * factors[i].b - factors[i].a * factors[i].a > 0.0))
            throw RealRootDetected("quadratic factor has real roots");
        d[i] = factors[i].d();
    }
    auto product_skipping = [&](std::size_t skip1, std::size_t skip2) {
        double p = 1.0;
        for (std::size_t k = 0; k < r; ++k)
            if (k != skip1 && k != skip2) p *= d[k];
        return p;
    };
    double s = 0.0;
    double t_sum = 0.0;
    for (std::size_t i = 0; i < r; ++i) {
        const double p = product_skipping(i, i);
        s += p;
        t_sum += factors[i].a * p;
    }
    const double t = -t_sum / (2.0 * s);
    const double prod_d = product_skipping(r, r);
    const double sum_d = std::accumulate(d.begin(), d.end(), 0.0);
    double pair_sum = 0.0;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            const double gap = factors[i].a - factors[j].a;
            pair_sum += product_skipping(i, j) * gap * gap;
        }
    const double u2 = prod_d / (4.0 * s * s) * (s * sum_d + pair_sum);
    return {t, std::sqrt(u2)};
}

HyperboloidPoint center_of_mass_hyperboloid(std::span<const HyperboloidPoint> points) {
    if (points.empty()) throw std::invalid_argument("center of mass of an empty set");
    Vec3 sum;
    for (const auto& p : points) {
        sum.x1 += p.x1;
        sum.x2 += p.x2;
        sum.x3 += p.x3;
    }
    const double norm = std::sqrt(minkowski(sum, sum));
    // Renormalize x3 from the other two so the result sits exactly on the sheet.
    const double x1 = sum.x1 / norm;
    const double x2 = sum.x2 / norm;
    return {x1, x2, std::sqrt(1.0 + x1 * x1 + x2 * x2)};
}

}  // namespace formred
