#include "formred/julia.hpp"

#include "formred/centroid.hpp"
#include "formred/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace formred {

namespace {

using Vec3d = Eigen::Vector3d;
using Mat3d = Eigen::Matrix3d;

// F~ with its gradient and Hessian in the coordinates (u, v, tau), where
// w = (u + iv) + e^tau j.
struct LocalModel {
    double value = 0.0;
    Vec3d gradient = Vec3d::Zero();
    Mat3d hessian = Mat3d::Zero();
    double riemannian_norm = 0.0;
};

LocalModel evaluate(const Vec3d& q, std::span<const Complex> roots) {
    LocalModel m;
    const double t = std::exp(q[2]);
    const double t2 = t * t;
    for (const auto& alpha : roots) {
        const double du = q[0] - alpha.real();
        const double dv = q[1] - alpha.imag();
        const double r = du * du + dv * dv;
        const double den = r + t2;
        const double den2 = den * den;
        m.value += std::log(den) - q[2];
        m.gradient[0] += 2.0 * du / den;
        m.gradient[1] += 2.0 * dv / den;
        m.gradient[2] += 2.0 * t2 / den - 1.0;
        m.hessian(0, 0) += 2.0 / den - 4.0 * du * du / den2;
        m.hessian(1, 1) += 2.0 / den - 4.0 * dv * dv / den2;
        m.hessian(0, 1) += -4.0 * du * dv / den2;
        m.hessian(0, 2) += -4.0 * du * t2 / den2;
        m.hessian(1, 2) += -4.0 * dv * t2 / den2;
        m.hessian(2, 2) += 4.0 * t2 * r / den2;
    }
    m.hessian(1, 0) = m.hessian(0, 1);
    m.hessian(2, 0) = m.hessian(0, 2);
    m.hessian(2, 1) = m.hessian(1, 2);
    const Vec3d riemannian(t * m.gradient[0], t * m.gradient[1], m.gradient[2]);
    m.riemannian_norm = riemannian.norm();
    return m;
}

double value_at(const Vec3d& q, std::span<const Complex> roots) {
    const double t2 = std::exp(2.0 * q[2]);
    double total = 0.0;
    for (const auto& alpha : roots) total += std::log(std::norm(Complex(q[0], q[1]) - alpha) + t2) - q[2];
    return total;
}

// Damped Newton over the first `dims` coordinates; coordinates past `dims`
// stay fixed (the H2 restriction keeps v = 0).
JuliaResult minimize(std::span<const Complex> roots, Vec3d q, int dims, const JuliaOptions& options) {
    const auto active = [dims](Vec3d v) {
        if (dims == 2) v[1] = 0.0;
        return v;
    };
    int iteration = 0;
    LocalModel m = evaluate(q, roots);
    for (; iteration < options.max_iterations && m.riemannian_norm > options.tol; ++iteration) {
        const Vec3d g = active(m.gradient);
        Mat3d h = m.hessian;
        if (dims == 2) {
            h.row(1).setZero();
            h.col(1).setZero();
            h(1, 1) = 1.0;
        }
        Vec3d step;
        const Eigen::LLT<Mat3d> llt(h);
        bool newton = llt.info() == Eigen::Success;
        if (newton) {
            step = active(llt.solve(-g));
            newton = step.allFinite() && g.dot(step) < 0.0;
        }
        if (!newton) {
            // Riemannian steepest descent expressed in (u, v, tau).
            const double t2 = std::exp(2.0 * q[2]);
            step = active(Vec3d(-t2 * g[0], -t2 * g[1], -g[2]));
        }
        // Keep a single step below unit hyperbolic length.
        const double t = std::exp(q[2]);
        const double length = std::max({std::abs(step[0]) / t, std::abs(step[1]) / t, std::abs(step[2])});
        if (length > 1.0) step /= length;

        const double slope = g.dot(step);
        // Near the optimum the decrease in F~ drops below rounding; the
        // gradient norm is then the only usable merit function.
        const bool resolvable = -slope > 1e-12 * (1.0 + std::abs(m.value));
        double alpha = 1.0;
        bool accepted = false;
        Vec3d next;
        LocalModel next_model;
        for (int k = 0; k < 60 && !accepted; ++k, alpha *= 0.5) {
            next = q + alpha * step;
            if (resolvable) {
                accepted = value_at(next, roots) <= m.value + 1e-4 * alpha * slope;
                if (accepted) next_model = evaluate(next, roots);
            } else {
                next_model = evaluate(next, roots);
                accepted = next_model.riemannian_norm < m.riemannian_norm;
            }
        }
        if (!accepted) break;
        q = next;
        m = next_model;
    }
    if (!(m.riemannian_norm <= options.tol)) {
        std::ostringstream msg;
        msg << "Julia minimization stopped at gradient norm " << m.riemannian_norm << " after " << iteration
            << " iterations";
        throw ConvergenceFailure(msg.str());
    }
    return {PointH3(Complex(q[0], q[1]), std::exp(q[2])), m.value, m.riemannian_norm, iteration};
}

struct RootCluster {
    Complex value;
    int multiplicity;
};

std::vector<RootCluster> cluster_roots(std::span<const Complex> roots) {
    std::vector<RootCluster> clusters;
    for (const auto& r : roots) {
        bool merged = false;
        for (auto& c : clusters) {
            if (std::abs(c.value - r) <= 1e-7 * (1.0 + std::abs(r))) {
                ++c.multiplicity;
                merged = true;
                break;
            }
        }
        if (!merged) clusters.push_back({r, 1});
    }
    return clusters;
}

}  // namespace

BarycentricWeights::BarycentricWeights(std::vector<double> t) : t_(std::move(t)) {
    bool any_positive = false;
    for (double v : t_) {
        if (!(v >= 0.0)) throw std::invalid_argument("barycentric weights must be nonnegative");
        any_positive = any_positive || v > 0.0;
    }
    if (!any_positive) throw std::invalid_argument("barycentric weights are all zero");
}

HermitianForm q_f(const BarycentricWeights& weights, std::span<const Complex> roots) {
    if (weights.size() != roots.size()) throw std::invalid_argument("q_f: one weight per root required");
    HermitianForm out{0.0, Complex(0.0), 0.0};
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const double w = weights.values()[i];
        out.a += w;
        out.b += w * std::conj(roots[i]);
        out.c += w * std::norm(roots[i]);
    }
    return out;
}

double theta0(double a0, const BarycentricWeights& weights, std::span<const Complex> roots) {
    for (double t : weights.values())
        if (!(t > 0.0)) throw std::invalid_argument("theta0 needs strictly positive weights");
    const HermitianForm q = q_f(weights, roots);
    const double disc = q.discriminant();
    if (!(disc > 0.0)) throw NotPositiveDefinite("Q_F is not positive definite");
    const double n = static_cast<double>(roots.size());
    double log_theta = 2.0 * std::log(std::abs(a0)) + 0.5 * n * std::log(disc) - n * std::log(n);
    for (double t : weights.values()) log_theta -= std::log(t);
    return std::exp(log_theta);
}

double julia_objective(const PointH3& w, std::span<const Complex> roots) {
    double total = 0.0;
    for (const auto& alpha : roots) total += boundary_dist_h3(w, BoundaryPoint3::at(alpha));
    return total;
}

std::array<double, 3> tangent_sum(const PointH3& w, std::span<const Complex> roots) {
    // Each Busemann term has Riemannian gradient
    // (2t du / D, 2t dv / D, (t^2 - r) / D), a unit vector.
    std::array<double, 3> out{0.0, 0.0, 0.0};
    const double t2 = w.t * w.t;
    for (const auto& alpha : roots) {
        const double du = w.z.real() - alpha.real();
        const double dv = w.z.imag() - alpha.imag();
        const double r = du * du + dv * dv;
        const double den = r + t2;
        out[0] += 2.0 * w.t * du / den;
        out[1] += 2.0 * w.t * dv / den;
        out[2] += (t2 - r) / den;
    }
    return out;
}

JuliaResult julia_zero(std::span<const Complex> roots, const JuliaOptions& options) {
    const auto clusters = cluster_roots(roots);
    const int n = static_cast<int>(roots.size());
    if (clusters.size() < 2) throw std::invalid_argument("Julia zero needs at least two distinct roots");
    if (clusters.size() == 2 && clusters[0].multiplicity == clusters[1].multiplicity) {
        const Complex mid = 0.5 * (clusters[0].value + clusters[1].value);
        const PointH3 top(mid, 0.5 * std::abs(clusters[0].value - clusters[1].value));
        const auto grad = tangent_sum(top, roots);
        return {top, julia_objective(top, roots), std::hypot(grad[0], grad[1], grad[2]), 0};
    }
    for (const auto& c : clusters)
        if (2 * c.multiplicity >= n)
            throw ConvergenceFailure("a root of multiplicity >= n/2 leaves F~ without a minimizer");

    Vec3d start;
    if (options.start) {
        start = Vec3d(options.start->z.real(), options.start->z.imag(), std::log(options.start->t));
    } else {
        Complex mean(0.0);
        for (const auto& r : roots) mean += r;
        mean /= static_cast<double>(n);
        double spread = 0.0;
        for (const auto& r : roots) spread += std::norm(r - mean);
        spread = std::sqrt(spread / n);
        start = Vec3d(mean.real(), mean.imag(), std::log(spread > 0.0 ? spread : 1.0));
    }
    return minimize(roots, start, 3, options);
}

JuliaResult julia_zero_real(const RootSet& roots, const JuliaOptions& options) {
    if (roots.pairs.empty()) throw std::invalid_argument("Julia zero needs at least one conjugate pair");
    const std::vector<Complex> all = roots.all_roots();
    const PointH2 start = options.start ? PointH2(options.start->z.real(), options.start->t)
                                        : center_of_mass_h2(roots.pairs);
    JuliaResult out = minimize(all, Vec3d(start.x, 0.0, std::log(start.y)), 2, options);
    out.point = PointH3(Complex(out.point.z.real(), 0.0), out.point.t);
    return out;
}

BinaryQuadratic julia_quadratic(const BinaryForm& form, const JuliaOptions& options) {
    return inv_zero_quadratic(julia_zero_real(root_set(form), options).point_h2());
}

HermitianForm julia_quadratic(std::span<const Complex> roots, const JuliaOptions& options) {
    return inv_zero_hermitian(julia_zero(roots, options).point);
}

}  // namespace formred
