#include "formred/hyperbolic.hpp"

#include "formred/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace formred {

namespace {

constexpr int kMaxReductionSteps = 10000;

Integer nearest_integer(double x) {
    Integer n;
    mpz_set_d(n.get_mpz_t(), std::floor(x + 0.5));
    return n;
}

Integer floor_of(const Rational& q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

}  // namespace

PointH2::PointH2(double x_, double y_) : x(x_), y(y_) {
    if (!(y > 0.0) || !std::isfinite(x) || !std::isfinite(y))
        throw std::domain_error("point of H2 needs finite x and y > 0");
}

PointH3::PointH3(Complex z_, double t_) : z(z_), t(t_) {
    if (!(t > 0.0) || !std::isfinite(z.real()) || !std::isfinite(z.imag()) || !std::isfinite(t))
        throw std::domain_error("point of H3 needs finite z and t > 0");
}

HyperboloidPoint::HyperboloidPoint(double a, double b, double c) : x1(a), x2(b), x3(c) {
    const double norm = -a * a - b * b + c * c;
    if (!(c > 0.0) || std::abs(norm - 1.0) > 1e-12 * std::max(1.0, c * c))
        throw std::domain_error("point is not on the upper sheet of the hyperboloid");
}

Mat2 Mat2::from(const UnimodularMatrix& m) { return {m.a().get_d(), m.b().get_d(), m.c().get_d(), m.d().get_d()}; }

Mat2 Mat2::inverse() const {
    const double det_inv = 1.0 / det();
    return {d * det_inv, -b * det_inv, -c * det_inv, a * det_inv};
}

Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

CMat2 CMat2::inverse() const {
    const Complex det_inv = 1.0 / det();
    return {d * det_inv, -b * det_inv, -c * det_inv, a * det_inv};
}

CMat2 operator*(const CMat2& l, const CMat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

double dist_h2(const PointH2& z, const PointH2& w) {
    // cosh d = 1 + 2 sinh^2(d/2) avoids cancellation for nearby points.
    const double chord = std::abs(z.as_complex() - w.as_complex());
    return 2.0 * std::asinh(chord / (2.0 * std::sqrt(z.y * w.y)));
}

std::pair<BoundaryPoint2, BoundaryPoint2> geodesic_endpoints(const PointH2& z, const PointH2& w) {
    const double scale = std::max({1.0, std::abs(z.x), std::abs(w.x)});
    if (std::abs(z.x - w.x) <= 1e-15 * scale) {
        // Vertical ray: the foot is closer to the lower point.
        if (z.y <= w.y) return {BoundaryPoint2::at(z.x), BoundaryPoint2::infinity()};
        return {BoundaryPoint2::infinity(), BoundaryPoint2::at(z.x)};
    }
    const double center = (std::norm(w.as_complex()) - std::norm(z.as_complex())) / (2.0 * (w.x - z.x));
    const double radius = std::hypot(z.x - center, z.y);
    const double left = center - radius;
    const double right = center + radius;
    // z is nearer the endpoint on its own side of w.
    if (z.x < w.x) return {BoundaryPoint2::at(left), BoundaryPoint2::at(right)};
    return {BoundaryPoint2::at(right), BoundaryPoint2::at(left)};
}

double dist_h2_cross_ratio(const PointH2& z, const PointH2& w) {
    const auto [z_inf, w_inf] = geodesic_endpoints(z, w);
    if (z_inf.is_infinity() || w_inf.is_infinity()) return std::abs(std::log(w.y / z.y));
    const Complex zi(*z_inf.value, 0.0);
    const Complex wi(*w_inf.value, 0.0);
    const Complex zc = z.as_complex();
    const Complex wc = w.as_complex();
    return std::log((std::abs(zc - wi) * std::abs(wc - zi)) / (std::abs(wc - wi) * std::abs(zc - zi)));
}

PointH2 geodesic_point(const PointH2& z, const PointH2& w, double s) {
    const auto [z_inf, w_inf] = geodesic_endpoints(z, w);
    if (z_inf.is_infinity() || w_inf.is_infinity()) {
        const double direction = w.y >= z.y ? 1.0 : -1.0;
        return {z.x, z.y * std::exp(direction * s)};
    }
    // Arc-length parameter on the semicircle: c + r (tanh tau + i sech tau).
    const double a = *z_inf.value;
    const double b = *w_inf.value;
    const double center = 0.5 * (a + b);
    const double radius = 0.5 * std::abs(b - a);
    const double tau_z = std::atanh((z.x - center) / radius);
    const double tau_w = std::atanh((w.x - center) / radius);
    const double tau = tau_z + (tau_w >= tau_z ? s : -s);
    return {center + radius * std::tanh(tau), radius / std::cosh(tau)};
}

double boundary_dist_h2(const BoundaryPoint2& a, const PointH2& z) {
    if (a.is_infinity()) return -std::log(z.y);
    const double dx = z.x - *a.value;
    return std::log((dx * dx + z.y * z.y) / z.y);
}

double dist_h3(const PointH3& w1, const PointH3& w2) {
    const double dt = w1.t - w2.t;
    const double chord = std::sqrt(std::norm(w1.z - w2.z) + dt * dt);
    return 2.0 * std::asinh(chord / (2.0 * std::sqrt(w1.t * w2.t)));
}

double boundary_dist_h3(const PointH3& w, const BoundaryPoint3& b) {
    if (b.is_infinity()) return -std::log(w.t);
    return std::log((std::norm(w.z - *b.value) + w.t * w.t) / w.t);
}

PointH2 mobius_h2(const PointH2& z, const Mat2& m) {
    const Mat2 g = m.inverse();
    const double den_re = g.c * z.x + g.d;
    const double den_im = g.c * z.y;
    const double den = den_re * den_re + den_im * den_im;
    const double x = ((g.a * z.x + g.b) * den_re + g.a * g.c * z.y * z.y) / den;
    return {x, g.det() * z.y / den};
}

PointH2 mobius_h2(const PointH2& z, const UnimodularMatrix& m) { return mobius_h2(z, Mat2::from(m)); }

BoundaryPoint2 mobius_h2(const BoundaryPoint2& p, const Mat2& m) {
    const Mat2 g = m.inverse();
    if (p.is_infinity()) {
        if (g.c == 0.0) return BoundaryPoint2::infinity();
        return BoundaryPoint2::at(g.a / g.c);
    }
    const double den = g.c * *p.value + g.d;
    if (den == 0.0) return BoundaryPoint2::infinity();
    return BoundaryPoint2::at((g.a * *p.value + g.b) / den);
}

PointH3 act_h3(const PointH3& w, const CMat2& m) {
    const CMat2 g = m.inverse();
    const Complex cz_d = g.c * w.z + g.d;
    const double t2 = w.t * w.t;
    const double den = std::norm(cz_d) + std::norm(g.c) * t2;
    const Complex z = ((g.a * w.z + g.b) * std::conj(cz_d) + g.a * std::conj(g.c) * t2) / den;
    return {z, std::abs(g.det()) * w.t / den};
}

BoundaryPoint3 act_boundary_h3(const BoundaryPoint3& p, const CMat2& m) {
    const CMat2 g = m.inverse();
    if (p.is_infinity()) {
        if (g.c == Complex(0.0)) return BoundaryPoint3::infinity();
        return BoundaryPoint3::at(g.a / g.c);
    }
    const Complex den = g.c * *p.value + g.d;
    if (den == Complex(0.0)) return BoundaryPoint3::infinity();
    return BoundaryPoint3::at((g.a * *p.value + g.b) / den);
}

double minkowski(const Vec3& x, const Vec3& y) { return -x.x1 * y.x1 - x.x2 * y.x2 + x.x3 * y.x3; }

HyperboloidPoint to_hyperboloid(const PointH2& z) {
    const double r2 = z.x * z.x + z.y * z.y;
    return {z.x / z.y, (r2 - 1.0) / (2.0 * z.y), (r2 + 1.0) / (2.0 * z.y)};
}

PointH2 from_hyperboloid(const HyperboloidPoint& p) {
    const double v = 1.0 / (p.x3 - p.x2);
    return {p.x1 * v, v};
}

bool in_fundamental_domain(const PointH2& z, double tol) {
    return std::abs(z.x) <= 0.5 + tol && std::abs(z.as_complex()) >= 1.0 - tol;
}

FundamentalDomainReduction reduce_point_to_fundamental_domain(const PointH2& start, double tie) {
    FundamentalDomainReduction out{start, UnimodularMatrix::identity(), {start}};
    double x = start.x;
    double y = start.y;
    for (int step = 0; step < kMaxReductionSteps; ++step) {
        bool moved = false;
        if (std::abs(x) > 0.5 + tie) {
            const Integer n = nearest_integer(x);
            x -= n.get_d();
            out.matrix = out.matrix * UnimodularMatrix::translation(n);
            moved = true;
        } else if (std::hypot(x, y) < 1.0 - tie) {
            const double r2 = x * x + y * y;
            x = -x / r2;
            y = y / r2;
            out.matrix = out.matrix * UnimodularMatrix::inversion();
            moved = true;
        } else if (x < -0.5 + tie) {
            x += 1.0;
            out.matrix = out.matrix * UnimodularMatrix::translation(-1);
            moved = true;
        } else if (x < 0.0 && std::hypot(x, y) < 1.0 + tie) {
            const double r2 = x * x + y * y;
            x = -x / r2;
            y = y / r2;
            out.matrix = out.matrix * UnimodularMatrix::inversion();
            moved = true;
        }
        if (!moved) {
            out.point = PointH2(x, y);
            return out;
        }
        out.path.emplace_back(x, y);
    }
    throw ConvergenceFailure("fundamental domain reduction did not terminate");
}

PointH2 ExactPointH2::approx() const { return {x.get_d(), std::sqrt(y_squared.get_d())}; }

ExactPointH2 mobius_exact(const ExactPointH2& z, const UnimodularMatrix& m) {
    const UnimodularMatrix g = m.inverse();
    const Rational ga(g.a()), gb(g.b()), gc(g.c()), gd(g.d());
    const Rational den_re = gc * z.x + gd;
    const Rational den = den_re * den_re + gc * gc * z.y_squared;
    ExactPointH2 out{((ga * z.x + gb) * den_re + ga * gc * z.y_squared) / den, z.y_squared / (den * den)};
    out.x.canonicalize();
    out.y_squared.canonicalize();
    return out;
}

bool in_fundamental_domain(const ExactPointH2& z) {
    return abs(z.x) <= Rational(1, 2) && z.x * z.x + z.y_squared >= 1;
}

ExactFundamentalDomainReduction reduce_point_to_fundamental_domain(const ExactPointH2& start) {
    ExactFundamentalDomainReduction out{start, UnimodularMatrix::identity()};
    const Rational half(1, 2);
    auto invert = [&out] {
        const Rational r2 = out.point.x * out.point.x + out.point.y_squared;
        out.point.x = -out.point.x / r2;
        out.point.y_squared = out.point.y_squared / (r2 * r2);
        out.matrix = out.matrix * UnimodularMatrix::inversion();
    };
    for (int step = 0; step < kMaxReductionSteps; ++step) {
        auto& p = out.point;
        const Rational r2 = p.x * p.x + p.y_squared;
        if (abs(p.x) > half) {
            const Integer n = floor_of(p.x + half);
            p.x -= n;
            out.matrix = out.matrix * UnimodularMatrix::translation(n);
        } else if (r2 < 1) {
            invert();
        } else if (p.x == -half) {
            p.x = half;
            out.matrix = out.matrix * UnimodularMatrix::translation(-1);
        } else if (p.x < 0 && r2 == 1) {
            invert();
        } else {
            return out;
        }
    }
    throw ConvergenceFailure("exact fundamental domain reduction did not terminate");
}

}  // namespace formred
