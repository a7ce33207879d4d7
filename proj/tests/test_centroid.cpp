#include "formred/centroid.hpp"
#include "formred/errors.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace formred;
using formred::testing::Gen;

namespace {

std::vector<NumericQuadraticFactor> factors_of(const std::vector<PointH2>& points) {
    std::vector<NumericQuadraticFactor> out;
    for (const auto& p : points) out.push_back({-2.0 * p.x, p.x * p.x + p.y * p.y});
    return out;
}

std::vector<NumericQuadraticFactor> random_factors(Gen& gen, int count) {
    std::vector<NumericQuadraticFactor> out;
    while (static_cast<int>(out.size()) < count) {
        const double a = gen.uniform(-10, 10);
        const double b = a * a / 4 + gen.uniform(0.1, 20);
        out.push_back({a, b});
    }
    return out;
}

std::vector<PointH2> random_points(Gen& gen) {
    std::vector<PointH2> out;
    const int n = static_cast<int>(gen.integer(1, 6));
    for (int i = 0; i < n; ++i) out.push_back(gen.point());
    return out;
}

}  // namespace

TEST_CASE("psi") {
    const std::vector<double> one_x{3.5}, one_y{0.25};
    CHECK(psi(one_x, one_y) == 3.5);
    const std::vector<double> x{1, 2, 6}, flat{2, 2, 2};
    CHECK(psi(x, flat) == doctest::Approx(3.0));

    const std::vector<Rational> rx{2, 6, 4}, ry{3, 4, 7};
    CHECK(psi(rx, ry) == Rational(230, 61));
    const std::vector<double> dx{2, 6, 4}, dy{3, 4, 7};
    CHECK(psi(dx, dy) == doctest::Approx(230.0 / 61).epsilon(1e-15));

    const std::vector<double> empty;
    CHECK_THROWS_AS(psi(empty, empty), std::invalid_argument);
    const std::vector<double> bad_y{1, -1, 1};
    CHECK_THROWS_AS(psi(x, bad_y), std::invalid_argument);
    const std::vector<double> short_y{1, 1};
    CHECK_THROWS_AS(psi(x, short_y), std::invalid_argument);
}

TEST_CASE("psi weights are the normalized cofactor products") {
    Gen gen(61);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(gen.integer(1, 8));
        std::vector<double> x, y;
        for (int i = 0; i < n; ++i) {
            x.push_back(gen.uniform(-10, 10));
            y.push_back(gen.uniform(0.1, 10));
        }
        const auto w = psi_weights(y);
        REQUIRE(w.size() == y.size());
        CHECK(std::all_of(w.begin(), w.end(), [](double v) { return v > 0; }));
        CHECK(std::abs(std::accumulate(w.begin(), w.end(), 0.0) - 1.0) <= 1e-14);

        // Literal products from the definition.
        std::vector<double> cof(n, 1.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (j != i) cof[i] *= y[j];
        const double total = std::accumulate(cof.begin(), cof.end(), 0.0);
        double literal = 0.0;
        for (int i = 0; i < n; ++i) {
            CHECK(w[i] == doctest::Approx(cof[i] / total).epsilon(1e-12));
            literal += cof[i] * x[i];
        }
        const double p = psi(x, y);
        CHECK(p == doctest::Approx(literal / total).epsilon(1e-12).scale(1.0));
        CHECK(p >= *std::min_element(x.begin(), x.end()) - 1e-12);
        CHECK(p <= *std::max_element(x.begin(), x.end()) + 1e-12);
    }
}

TEST_CASE("q_of_t") {
    CHECK(q_of_t(2.0, 2.0, 3.0) == 9.0);
    const double t = 230.0 / 61;
    Rational tq(230, 61);
    const Rational exact = (tq - 2) * (tq - 2) + 9;
    CHECK(exact == Rational(45153, 3721));
    CHECK(q_of_t(t, 2.0, 3.0) == doctest::Approx(exact.get_d()).epsilon(1e-15));
    Gen gen(62);
    for (int trial = 0; trial < 100; ++trial) {
        const double tt = gen.uniform(-10, 10);
        const double x = gen.uniform(-10, 10);
        const double y = gen.uniform(0.1, 10);
        CHECK(q_of_t(tt, x, y) >= y * y * (1 - 1e-15));
        CHECK(q_of_t(tt, x, y) == doctest::Approx((tt - x) * (tt - x) + y * y).epsilon(1e-13));
    }
}

TEST_CASE("center of the example roots") {
    const auto roots = testing::sextic_roots();
    const PointH2 c = center_of_mass_h2(roots);
    CHECK(c.x == doctest::Approx(230.0 / 61).epsilon(1e-13));
    CHECK(c.y == doctest::Approx(14.0 / 61 * std::sqrt(426.0)).epsilon(1e-13));

    std::vector<ExactPointH2> exact_points;
    for (const auto& p : roots) exact_points.push_back({Rational(static_cast<long>(p.x)), Rational(static_cast<long>(p.y * p.y))});
    const auto exact = center_exact(exact_points);
    REQUIRE(exact.has_value());
    CHECK(exact->t == Rational(230, 61));
    CHECK(exact->u_squared == Rational(83496, 3721));
    CHECK(exact->u_squared == Rational(196 * 426, 3721));

    const std::vector<QuadraticFactor> factors{{-4, 13}, {-12, 52}, {-8, 65}};
    const auto from_factors = center_exact(factors);
    REQUIRE(from_factors.has_value());
    CHECK(from_factors->t == Rational(230, 61));
    CHECK(from_factors->u_squared == Rational(83496, 3721));

    const PointH2 lemma = center_from_quadratic_factors(factors);
    CHECK(dist_h2(lemma, c) < 1e-12);
    const PointH2 alt = alt_center_presentation(factors_of(roots));
    CHECK(dist_h2(alt, c) < 1e-12);

    const auto [r1, r2] = center_system_residuals(roots, c);
    CHECK(std::abs(r1) < 1e-12);
    CHECK(std::abs(r2) < 1e-10);

    const PointH2 oracle = oracle_center(roots);
    CHECK(std::abs(oracle.x - 3.7705) <= 1e-4);
    CHECK(std::abs(oracle.y - 4.7370) <= 1e-4);
}

TEST_CASE("irrational pairs have no exact center") {
    const std::vector<ExactPointH2> pts{{0, 2}, {1, 1}};
    CHECK_FALSE(center_exact(pts).has_value());
    const std::vector<QuadraticFactor> factors{{0, 1}, {0, 2}};
    CHECK_FALSE(center_exact(factors).has_value());
}

TEST_CASE("trivial configurations") {
    const std::vector<PointH2> one{{1.5, 0.5}};
    const PointH2 c = center_of_mass_h2(one);
    CHECK(c.x == 1.5);
    CHECK(c.y == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(dist_h2(oracle_center(one), one[0]) < 1e-6);

    const std::vector<PointH2> symmetric{{-2.0, 3.0}, {2.0, 3.0}};
    CHECK(center_of_mass_h2(symmetric).x == 0.0);

    const std::vector<NumericQuadraticFactor> i_factor{{0.0, 1.0}};
    const PointH2 ci = center_from_quadratic_factors(i_factor);
    CHECK(ci.x == 0.0);
    CHECK(ci.y == doctest::Approx(1.0));
    const PointH2 ai = alt_center_presentation(i_factor);
    CHECK(ai.x == doctest::Approx(0.0));
    CHECK(ai.y == doctest::Approx(1.0));

    const std::vector<NumericQuadraticFactor> real_factor{{0.0, -1.0}};
    CHECK_THROWS_AS(center_from_quadratic_factors(real_factor), RealRootDetected);

    const HyperboloidPoint h = to_hyperboloid({0.3, 2.0});
    const std::vector<HyperboloidPoint> single{h};
    const HyperboloidPoint back = center_of_mass_hyperboloid(single);
    CHECK(back.x1 == doctest::Approx(h.x1));
    CHECK(back.x2 == doctest::Approx(h.x2));
    CHECK(back.x3 == doctest::Approx(h.x3));
}

TEST_CASE("closed form solves the stationarity system") {
    Gen gen(63);
    for (int trial = 0; trial < 200; ++trial) {
        const auto pts = random_points(gen);
        const PointH2 c = center_of_mass_h2(pts);
        const auto [r1, r2] = center_system_residuals(pts, c);
        double scale = 0.0;
        for (const auto& p : pts) scale += q_of_t(c.x, p.x, p.y) / p.y;
        CHECK(std::abs(r1) <= 1e-10 * (1 + scale));
        CHECK(std::abs(r2) <= 1e-10 * (1 + scale));
        double lo = pts[0].x, hi = pts[0].x;
        for (const auto& p : pts) {
            lo = std::min(lo, p.x);
            hi = std::max(hi, p.x);
        }
        CHECK(c.x >= lo - 1e-12);
        CHECK(c.x <= hi + 1e-12);
    }
}

TEST_CASE("factor, root and alternative presentations agree") {
    Gen gen(64);
    for (int trial = 0; trial < 200; ++trial) {
        const auto factors = random_factors(gen, static_cast<int>(gen.integer(1, 6)));
        std::vector<PointH2> roots;
        for (const auto& f : factors) roots.push_back(f.root());
        const PointH2 by_roots = center_of_mass_h2(roots);
        const PointH2 by_factors = center_from_quadratic_factors(factors);
        const PointH2 by_alt = alt_center_presentation(factors);
        CHECK(dist_h2(by_roots, by_factors) <= 1e-10);
        CHECK(dist_h2(by_roots, by_alt) <= 1e-10);
        CHECK(dist_h2(by_factors, by_alt) <= 1e-10);
    }
}

TEST_CASE("hyperboloid transfer and the cosh identity") {
    Gen gen(65);
    auto check_set = [](const std::vector<PointH2>& pts) {
        std::vector<HyperboloidPoint> lifted;
        for (const auto& p : pts) lifted.push_back(to_hyperboloid(p));
        const HyperboloidPoint h = center_of_mass_hyperboloid(lifted);
        const PointH2 c = center_of_mass_h2(pts);
        CHECK(dist_h2(from_hyperboloid(h), c) <= 1e-9);
        Vec3 sum;
        for (const auto& p : lifted) {
            sum.x1 += p.x1;
            sum.x2 += p.x2;
            sum.x3 += p.x3;
        }
        const double norm = std::sqrt(minkowski(sum, sum));
        double cosh_sum = 0.0;
        for (const auto& p : pts) cosh_sum += std::cosh(dist_h2(c, p));
        CHECK(cosh_sum == doctest::Approx(norm).epsilon(1e-10));
        CHECK(sum_cosh_distances(pts, c) == doctest::Approx(norm).epsilon(1e-10));
    };
    check_set(testing::sextic_roots());
    for (int trial = 0; trial < 200; ++trial) check_set(random_points(gen));
}

TEST_CASE("closed form matches brute-force minimization") {
    Gen gen(66);
    for (int trial = 0; trial < 40; ++trial) {
        const auto pts = gen.root_pairs(static_cast<int>(gen.integer(2, 5)));
        CHECK(dist_h2(oracle_center(pts), center_of_mass_h2(pts)) <= 1e-6);
    }
}

TEST_CASE("center commutes with integer unimodular actions") {
    Gen gen(67);
    for (int trial = 0; trial < 200; ++trial) {
        const auto pts = random_points(gen);
        const UnimodularMatrix m = gen.sl2z(10);
        std::vector<PointH2> moved;
        for (const auto& p : pts) moved.push_back(mobius_h2(p, m));
        CHECK(dist_h2(center_of_mass_h2(moved), mobius_h2(center_of_mass_h2(pts), m)) <= 1e-8);
    }
}

TEST_CASE("center is a strict minimum") {
    Gen gen(68);
    for (int trial = 0; trial < 100; ++trial) {
        const auto pts = random_points(gen);
        const PointH2 c = center_of_mass_h2(pts);
        const double best = sum_cosh_distances(pts, c);
        for (int k = 0; k < 10; ++k) {
            const double dx = gen.uniform(-0.1, 0.1);
            const double dy = gen.uniform(-0.1, 0.1);
            if (std::hypot(dx, dy) < 1e-3 || c.y + dy <= 0) continue;
            CHECK(best + 1e-12 < sum_cosh_distances(pts, PointH2(c.x + dx, c.y + dy)));
        }
    }
}

TEST_CASE("repeated points") {
    Gen gen(69);
    for (int trial = 0; trial < 50; ++trial) {
        const PointH2 p = gen.point();
        const PointH2 q = gen.point();
        const std::vector<PointH2> pq{p, q};
        const std::vector<PointH2> pqpq{p, q, q, p};
        const std::vector<PointH2> ppq{p, p, q};
        CHECK(dist_h2(center_of_mass_h2(pq), center_of_mass_h2(pqpq)) <= 1e-10);
        // Doubling p is the same as giving it weight two in the cosh sum.
        CHECK(dist_h2(center_of_mass_h2(ppq), oracle_center(ppq)) <= 1e-6);
    }
}
