#pragma once

#include "formred/forms.hpp"
#include "formred/hyperbolic.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace formred::testing {

inline BinaryForm sextic() {
    return BinaryForm({1, -24, 306, -2308, 10933, -29068, 43940});
}

inline BinaryForm reduced_sextic() {
    return BinaryForm({1, 0, 66, 28, 1093, 1372, 12740});
}

inline std::vector<PointH2> sextic_roots() {
    return {{2.0, 3.0}, {6.0, 4.0}, {4.0, 7.0}};
}

inline BinaryForm form_of(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return BinaryForm(std::move(c));
}

// Seeded generators for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    PointH2 point(double spread = 5.0) {
        return {uniform(-spread, spread), std::exp(uniform(std::log(0.1), std::log(spread + 1.0)))};
    }

    PointH3 point3(double spread = 5.0) {
        return PointH3(Complex(uniform(-spread, spread), uniform(-spread, spread)),
                       std::exp(uniform(std::log(0.1), std::log(spread + 1.0))));
    }

    Complex complex(double spread = 5.0) { return {uniform(-spread, spread), uniform(-spread, spread)}; }

    Mat2 sl2r() {
        const double a = (coin() ? 1.0 : -1.0) * uniform(0.5, 2.0);
        const double b = uniform(-2.0, 2.0);
        const double c = uniform(-2.0, 2.0);
        return {a, b, c, (1.0 + b * c) / a};
    }

    CMat2 sl2c() {
        Complex a = complex(2.0);
        while (std::abs(a) < 0.3) a = complex(2.0);
        const Complex b = complex(2.0);
        const Complex c = complex(2.0);
        return {a, b, c, (1.0 + b * c) / a};
    }

    /// Word in T^k and S with entries bounded by `bound`.
    UnimodularMatrix sl2z(long bound) {
        for (;;) {
            UnimodularMatrix m;
            const long length = integer(0, 6);
            bool ok = true;
            for (long i = 0; i < length && ok; ++i) {
                m = m * (coin() ? UnimodularMatrix::inversion() : UnimodularMatrix::translation(integer(-4, 4)));
                ok = abs(m.a()) <= bound && abs(m.b()) <= bound && abs(m.c()) <= bound && abs(m.d()) <= bound;
            }
            if (ok) return m;
        }
    }

    /// Integer form of the given degree with coefficients in [-bound, bound], c0 != 0.
    BinaryForm integer_form(int degree, long bound) {
        std::vector<Rational> c;
        for (int i = 0; i <= degree; ++i) {
            long v = integer(-bound, bound);
            if (i == 0 && v == 0) v = 1;
            c.emplace_back(v);
        }
        return BinaryForm(std::move(c));
    }

    /// Upper half-plane roots with distinct, well separated values.
    std::vector<PointH2> root_pairs(int count, double spread = 4.0) {
        std::vector<PointH2> out;
        while (static_cast<int>(out.size()) < count) {
            const PointH2 p(uniform(-spread, spread), uniform(0.3, spread));
            bool far = true;
            for (const auto& q : out) far = far && std::hypot(p.x - q.x, p.y - q.y) > 0.05;
            if (far) out.push_back(p);
        }
        return out;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline Complex to_complex(const PointH2& p) { return {p.x, p.y}; }

inline std::vector<Complex> doubled(const std::vector<PointH2>& pairs) {
    std::vector<Complex> out;
    for (const auto& p : pairs) {
        out.emplace_back(p.x, p.y);
        out.emplace_back(p.x, -p.y);
    }
    return out;
}

}  // namespace formred::testing
