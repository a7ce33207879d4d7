#include "formred/roots.hpp"

#include "formred/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace formred {

namespace {

namespace mp = boost::multiprecision;
using BigReal = mp::cpp_bin_float_50;
using BigComplex = mp::cpp_complex_50;

using QPoly = std::vector<Rational>;  // ascending powers

constexpr int kDoubleIterations = 500;
constexpr int kBigIterations = 200;

// ---- exact polynomial arithmetic over Q ------------------------------------

void trim(QPoly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

int deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly derivative(const QPoly& p) {
    if (p.size() <= 1) return {Rational(0)};
    QPoly out(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * static_cast<long>(i);
    return out;
}

QPoly monic(QPoly p) {
    trim(p);
    const Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

// Quotient and remainder of a / b, b nonzero.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    trim(a);
    const int db = deg(b);
    if (deg(a) < db) return {{Rational(0)}, a};
    QPoly q(static_cast<std::size_t>(deg(a) - db) + 1, Rational(0));
    for (int k = deg(a) - db; k >= 0; --k) {
        const Rational coef = a[k + db] / b.back();
        q[k] = coef;
        if (coef == 0) continue;
        for (int j = 0; j <= db; ++j) a[k + j] -= coef * b[j];
    }
    a.resize(static_cast<std::size_t>(std::max(db, 1)));
    trim(a);
    return {q, a};
}

bool is_zero(const QPoly& p) {
    return std::all_of(p.begin(), p.end(), [](const Rational& c) { return c == 0; });
}

QPoly gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!is_zero(b)) {
        QPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

QPoly subtract(const QPoly& a, const QPoly& b) {
    QPoly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

// Yun's squarefree decomposition: p = lead * prod_i f_i^i.
std::vector<std::pair<QPoly, int>> squarefree_parts(const QPoly& p) {
    std::vector<std::pair<QPoly, int>> out;
    const QPoly dp = derivative(p);
    const QPoly c = gcd(p, dp);
    if (deg(c) == 0) {
        out.emplace_back(monic(p), 1);
        return out;
    }
    QPoly w = divmod(p, c).first;
    QPoly y = divmod(dp, c).first;
    QPoly z = subtract(y, derivative(w));
    int multiplicity = 1;
    while (deg(w) > 0) {
        const QPoly g = gcd(w, z);
        if (deg(g) > 0) out.emplace_back(g, multiplicity);
        w = divmod(w, g).first;
        y = divmod(z, g).first;
        z = subtract(y, derivative(w));
        ++multiplicity;
    }
    return out;
}

// ---- numeric root finding --------------------------------------------------

BigReal to_big(const Rational& q) {
    return BigReal(q.get_num().get_str()) / BigReal(q.get_den().get_str());
}

template <class C>
std::pair<C, C> horner_with_derivative(const std::vector<C>& coeffs_desc, const C& x) {
    C value = coeffs_desc[0];
    C slope = C(0);
    for (std::size_t i = 1; i < coeffs_desc.size(); ++i) {
        slope = slope * x + value;
        value = value * x + coeffs_desc[i];
    }
    return {value, slope};
}

// Positive root of x^m - sum |a_k| x^(m-k) for a monic polynomial.
double cauchy_radius(const std::vector<double>& monic_desc) {
    const int m = static_cast<int>(monic_desc.size()) - 1;
    double hi = 1.0;
    for (int k = 1; k <= m; ++k) hi = std::max(hi, 1.0 + std::abs(monic_desc[k]));
    auto bound_poly = [&](double x) {
        double v = 1.0;
        for (int k = 1; k <= m; ++k) v = v * x - std::abs(monic_desc[k]);
        return v;
    };
    double lo = 0.0;
    for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (bound_poly(mid) > 0.0 ? hi : lo) = mid;
    }
    return std::max(hi, 1e-300);
}

// Returns the largest relative step of the last sweep (NaN on breakdown).
template <class C, class R>
R aberth(const std::vector<C>& coeffs_desc, std::vector<C>& z, const R& rel_tol, int max_iterations) {
    const std::size_t m = z.size();
    R worst = R(0);
    for (int it = 0; it < max_iterations; ++it) {
        worst = R(0);
        for (std::size_t k = 0; k < m; ++k) {
            const auto [p, dp] = horner_with_derivative(coeffs_desc, z[k]);
            if (p == C(0)) continue;
            const C ratio = p / dp;
            C repulsion = C(0);
            for (std::size_t j = 0; j < m; ++j)
                if (j != k) repulsion += C(1) / (z[k] - z[j]);
            const C step = ratio / (C(1) - ratio * repulsion);
            z[k] -= step;
            using std::abs;
            const R size = abs(z[k]);
            const R rel = abs(step) / (size > R(1e-300) ? size : R(1));
            if (rel > worst) worst = rel;
        }
        if (!(worst == worst) || worst <= rel_tol) return worst;
    }
    return worst;
}

std::vector<Complex> solve_squarefree(const QPoly& factor) {
    const QPoly g = monic(factor);
    const int m = deg(g);
    if (m == 1) return {Complex(-g[0].get_d(), 0.0)};

    std::vector<double> desc(static_cast<std::size_t>(m) + 1);
    std::vector<BigComplex> big_desc(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) {
        desc[i] = g[m - i].get_d();
        big_desc[i] = BigComplex(to_big(g[m - i]));
    }

    const double radius = cauchy_radius(desc);
    std::vector<Complex> z(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k)
        z[k] = std::polar(radius, 2.0 * std::numbers::pi * k / m + 0.4);
    aberth(std::vector<Complex>(desc.begin(), desc.end()), z, 1e-15, kDoubleIterations);

    // Refine in 50 digits from the double approximation. Simultaneous updates
    // keep nearby roots apart where plain Newton could merge them.
    std::vector<BigComplex> big_z(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) {
        const bool finite = std::isfinite(z[k].real()) && std::isfinite(z[k].imag());
        const Complex start = finite ? z[k] : std::polar(radius, 2.0 * std::numbers::pi * k / m + 0.4);
        big_z[k] = BigComplex(BigReal(start.real()), BigReal(start.imag()));
    }
    // Clustered roots put a noise floor on the step size well above the
    // target; any floor below 1e-24 is enough for double output.
    const BigReal accepted("1e-24");
    const auto converged = [&](const BigReal& step) { return step == step && step <= accepted; };
    if (!converged(aberth(big_desc, big_z, BigReal("1e-40"), kBigIterations))) {
        // A poor double start: restart from the circle in full precision.
        for (int k = 0; k < m; ++k) {
            const Complex s = std::polar(radius, 2.0 * std::numbers::pi * k / m + 0.4);
            big_z[k] = BigComplex(BigReal(s.real()), BigReal(s.imag()));
        }
        if (!converged(aberth(big_desc, big_z, BigReal("1e-40"), 4 * kBigIterations)))
            throw ConvergenceFailure("root finder did not converge");
    }
    std::vector<Complex> out;
    out.reserve(big_z.size());
    for (const auto& r : big_z) out.emplace_back(r.real().convert_to<double>(), r.imag().convert_to<double>());
    return out;
}

struct RootsWithResidual {
    std::vector<Complex> roots;
    double residual = 0.0;
};

double normalized_residual(const BinaryForm& form, std::span<const Complex> roots) {
    std::vector<BigComplex> desc;
    BigReal h = to_big(height(form));
    for (const auto& c : form.coeffs()) desc.emplace_back(to_big(c));
    double worst = 0.0;
    const int n = form.degree();
    for (const auto& r : roots) {
        const BigComplex x(BigReal(r.real()), BigReal(r.imag()));
        const BigComplex value = horner_with_derivative(desc, x).first;
        const BigReal scale = h * mp::pow(BigReal(1) + BigReal(std::abs(r)), n);
        worst = std::max(worst, static_cast<double>(abs(value) / scale));
    }
    return worst;
}

RootsWithResidual roots_with_residual(const BinaryForm& form, double tol) {
    if (form.leading() == 0) throw RealRootDetected("form has a root at infinity (leading coefficient 0)");
    const int n = form.degree();
    QPoly p(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) p[n - i] = form.coeffs()[i];

    RootsWithResidual out;
    for (const auto& [factor, multiplicity] : squarefree_parts(p)) {
        for (const auto& r : solve_squarefree(factor))
            for (int k = 0; k < multiplicity; ++k) out.roots.push_back(r);
    }
    std::sort(out.roots.begin(), out.roots.end(), [](const Complex& l, const Complex& r) {
        return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag();
    });
    out.residual = normalized_residual(form, out.roots);
    if (static_cast<int>(out.roots.size()) != n || !(out.residual <= tol)) {
        std::ostringstream msg;
        msg << "root residual " << out.residual << " exceeds tolerance " << tol;
        throw ConvergenceFailure(msg.str());
    }
    return out;
}

// Best rational approximation with denominator <= max_den via continued fractions.
std::optional<Rational> rationalize(double value, const Integer& max_den, double rel_tol) {
    if (!std::isfinite(value)) return std::nullopt;
    Integer h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
    long double x = value;
    for (int it = 0; it < 64; ++it) {
        const long double floor_x = std::floor(x);
        Integer a;
        mpz_set_d(a.get_mpz_t(), static_cast<double>(floor_x));
        const Integer h = a * h_prev + h_prev2;
        const Integer k = a * k_prev + k_prev2;
        if (k > max_den) break;
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
        const Rational candidate(h, k);
        if (std::abs(candidate.get_d() - value) <= rel_tol * std::max(1.0, std::abs(value))) {
            Rational out = candidate;
            out.canonicalize();
            return out;
        }
        const long double frac = x - floor_x;
        if (frac == 0.0L) break;
        x = 1.0L / frac;
    }
    return std::nullopt;
}

}  // namespace

std::vector<Complex> RootSet::all_roots() const {
    std::vector<Complex> out;
    out.reserve(2 * pairs.size());
    for (const auto& p : pairs) {
        out.emplace_back(p.x, p.y);
        out.emplace_back(p.x, -p.y);
    }
    return out;
}

double NumericQuadraticFactor::d() const { return std::sqrt(4.0 * b - a * a); }

PointH2 NumericQuadraticFactor::root() const { return {-0.5 * a, 0.5 * d()}; }

std::vector<Complex> complex_roots(const BinaryForm& form, double tol) {
    return roots_with_residual(form, tol).roots;
}

RootSet pair_conjugates(std::span<const Complex> roots, double tol) {
    std::vector<Complex> upper;
    std::vector<Complex> lower;
    for (const auto& r : roots) {
        if (std::abs(r.imag()) <= kRealnessThreshold * (1.0 + std::abs(r))) {
            std::ostringstream msg;
            msg << "real root detected near " << r.real();
            throw RealRootDetected(msg.str());
        }
        (r.imag() > 0.0 ? upper : lower).push_back(r);
    }
    if (upper.size() != lower.size()) throw UnpairedRoot("roots do not come in conjugate pairs");
    auto by_position = [](const Complex& l, const Complex& r) {
        return l.real() != r.real() ? l.real() < r.real() : std::abs(l.imag()) < std::abs(r.imag());
    };
    std::sort(upper.begin(), upper.end(), by_position);
    std::sort(lower.begin(), lower.end(), by_position);

    RootSet out;
    std::vector<bool> used(lower.size(), false);
    for (const auto& alpha : upper) {
        std::size_t best = lower.size();
        double best_gap = 0.0;
        for (std::size_t j = 0; j < lower.size(); ++j) {
            if (used[j]) continue;
            const double gap = std::abs(alpha - std::conj(lower[j]));
            if (best == lower.size() || gap < best_gap) {
                best = j;
                best_gap = gap;
            }
        }
        if (best == lower.size() || best_gap > tol * (1.0 + std::abs(alpha))) {
            std::ostringstream msg;
            msg << "root " << alpha << " has no conjugate partner";
            throw UnpairedRoot(msg.str());
        }
        used[best] = true;
        const Complex rep = 0.5 * (alpha + std::conj(lower[best]));
        out.pairs.emplace_back(rep.real(), rep.imag());
    }
    std::sort(out.pairs.begin(), out.pairs.end(),
              [](const PointH2& l, const PointH2& r) { return l.x != r.x ? l.x < r.x : l.y < r.y; });
    return out;
}

RootSet root_set(const BinaryForm& form) {
    const auto found = roots_with_residual(form, 1e-12);
    RootSet out = pair_conjugates(found.roots);
    out.residual = found.residual;
    return out;
}

std::vector<NumericQuadraticFactor> real_quadratic_factors(const RootSet& roots) {
    std::vector<NumericQuadraticFactor> out;
    out.reserve(roots.pairs.size());
    for (const auto& p : roots.pairs) out.push_back({-2.0 * p.x, p.x * p.x + p.y * p.y});
    return out;
}

std::vector<NumericQuadraticFactor> real_quadratic_factors(const BinaryForm& form) {
    return real_quadratic_factors(root_set(form));
}

std::optional<std::vector<QuadraticFactor>> exact_quadratic_factors(const BinaryForm& form) {
    RootSet roots;
    try {
        roots = root_set(form);
    } catch (const Error&) {
        return std::nullopt;
    }
    const Integer max_den = 1000000;
    std::vector<QuadraticFactor> out;
    for (const auto& f : real_quadratic_factors(roots)) {
        const auto a = rationalize(f.a, max_den, 1e-10);
        const auto b = rationalize(f.b, max_den, 1e-10);
        if (!a || !b || 4 * *b - *a * *a <= 0) return std::nullopt;
        out.emplace_back(*a, *b);
    }
    const BinaryForm product = from_quadratic_factors(out);
    for (std::size_t i = 0; i < product.coeffs().size(); ++i)
        if (product.coeffs()[i] * form.leading() != form.coeffs()[i]) return std::nullopt;
    return out;
}

}  // namespace formred
