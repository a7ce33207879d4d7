// Acceptance suite: one PASS/FAIL line per criterion, each with its runtime
// budget. Exit status is nonzero if any criterion fails.

#include "formred/centroid.hpp"
#include "formred/corpus.hpp"
#include "formred/julia.hpp"
#include "formred/paramspace.hpp"
#include "formred/reduce.hpp"
#include "formred/roots.hpp"

#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace formred;
using formred::testing::Gen;

namespace {

// Seed of the scramble-recover corpus.
constexpr std::uint64_t kCorpusSeed = 20240601;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const char* name, double budget_ms, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome result;
    try {
        result = body();
    } catch (const std::exception& e) {
        result.ok = false;
        result.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (result.ok && ms >= budget_ms) {
        result.ok = false;
        result.detail = "over time budget";
    }
    if (!result.ok) ++failures;
    std::printf("%s %2d %-36s %10.3f ms (budget %g ms)%s%s\n", result.ok ? "PASS" : "FAIL", id, name, ms, budget_ms,
                result.detail.empty() ? "" : "  ", result.detail.c_str());
    std::fflush(stdout);
}

const std::vector<QuadraticFactor>& example_factors() {
    static const std::vector<QuadraticFactor> f{{-4, 13}, {-12, 52}, {-8, 65}};
    return f;
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

double rel(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

Outcome worked_example() {
    Outcome o;
    const BinaryForm f = from_quadratic_factors(example_factors());
    o.require(f == testing::sextic(), "expanded coefficients differ");
    o.require(height(f) == 43940, "height differs");
    return o;
}

Outcome centroid_example() {
    Outcome o;
    const auto exact = center_exact(std::span<const QuadraticFactor>(example_factors()));
    o.require(exact.has_value(), "no exact center");
    if (!exact) return o;
    o.require(exact->t == Rational(230, 61), "t != 230/61");
    o.require(exact->u_squared == Rational(83496, 3721), "u^2 != 83496/3721");
    const PointH2 by_roots = center_of_mass_h2(testing::sextic_roots());
    const PointH2 by_factors = center_from_quadratic_factors(std::span<const QuadraticFactor>(example_factors()));
    const double t = exact->t.get_d();
    const double u = std::sqrt(exact->u_squared.get_d());
    for (const PointH2& p : {by_roots, by_factors}) {
        o.require(rel(p.x, t) <= 1e-12, "float t disagrees");
        o.require(rel(p.y, u) <= 1e-12, "float u disagrees");
    }
    return o;
}

Outcome reduction(Method method) {
    Outcome o;
    const ReductionReport r = reduce_form(testing::sextic(), method);
    o.require(r.matrix == UnimodularMatrix::translation(4), "matrix is " + to_string(r.matrix));
    o.require(r.reduced == testing::reduced_sextic(), "reduced form is " + serialize(r.reduced));
    o.require(r.height_after == 12740, "height after is " + r.height_after.get_str());
    if (method == Method::julia) {
        o.require(r.diagnostics.gradient_norm <= 1e-10, "gradient norm above 1e-10");
        o.require(r.zero_point.x > 3.5 && r.zero_point.x < 4.5, "Re(w0) outside (3.5, 4.5)");
    }
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    Gen gen(501);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto pts = gen.root_pairs(static_cast<int>(gen.integer(2, 5)));
        worst = std::max(worst, dist_h2(oracle_center(pts), center_of_mass_h2(pts)));
    }
    o.require(worst <= 1e-6, "max d_H " + sci(worst));
    std::ostringstream s;
    s << "max d_H " << worst;
    if (o.ok) o.detail = s.str();
    return o;
}

Outcome equivariance() {
    Outcome o;
    Gen gen(601);
    double worst_maps = 0.0;
    double worst_forms = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const UnimodularMatrix m = gen.sl2z(10);
        const auto pts = gen.root_pairs(static_cast<int>(gen.integer(1, 5)));
        std::vector<PointH2> moved;
        for (const auto& p : pts) moved.push_back(mobius_h2(p, m));
        worst_maps = std::max(worst_maps,
                              dist_h2(center_of_mass_h2(moved), mobius_h2(center_of_mass_h2(pts), m)));
        const PointH2 w = julia_zero_real(RootSet{pts, 0.0}).point_h2();
        const PointH2 wm = julia_zero_real(RootSet{moved, 0.0}).point_h2();
        worst_maps = std::max(worst_maps, dist_h2(wm, mobius_h2(w, m)));

        const Mat2 real = Mat2::from(m);
        const PointH2 z = gen.point();
        const BinaryQuadratic q = inv_zero_quadratic(z);
        worst_forms = std::max(worst_forms, dist_h2(zero_quadratic(act_on_quadratic(q, real)), mobius_h2(z, real)));
        const PointH3 v = gen.point3();
        const CMat2 cm = CMat2::from(real);
        worst_forms =
            std::max(worst_forms, dist_h3(zero_hermitian(act_on_hermitian(inv_zero_hermitian(v), cm)), act_h3(v, cm)));
    }
    o.require(worst_maps <= 1e-7, "zero maps: max d_H " + sci(worst_maps));
    o.require(worst_forms <= 1e-10, "quadratic/Hermitian: max d_H " + sci(worst_forms));
    return o;
}

Outcome gradient_certification() {
    Outcome o;
    Gen gen(701);
    const double h = 1e-6;
    double worst_fd = 0.0;
    double worst_restart = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Complex> roots;
        const int n = static_cast<int>(gen.integer(3, 8));
        while (static_cast<int>(roots.size()) < n) {
            const Complex r = gen.complex(4.0);
            bool far = true;
            for (Complex s : roots) far = far && std::abs(r - s) > 0.1;
            if (far) roots.push_back(r);
        }
        const PointH3 w = gen.point3(3.0);
        const auto g = tangent_sum(w, roots);
        auto f = [&](double du, double dv, double dt) {
            return julia_objective(PointH3(w.z + Complex(du, dv), w.t + dt), roots);
        };
        const double fd0 = w.t * (f(h, 0, 0) - f(-h, 0, 0)) / (2 * h);
        const double fd1 = w.t * (f(0, h, 0) - f(0, -h, 0)) / (2 * h);
        const double fd2 = w.t * (f(0, 0, h) - f(0, 0, -h)) / (2 * h);
        worst_fd = std::max(worst_fd, std::hypot(fd0 - g[0], fd1 - g[1], fd2 - g[2]) / std::hypot(g[0], g[1], g[2]));

        const JuliaResult base = julia_zero(roots);
        o.require(base.gradient_norm <= 1e-10, "minimization not certified");
        for (int k = 0; k < 5; ++k) {
            JuliaOptions opts;
            opts.start = gen.point3(6.0);
            worst_restart = std::max(worst_restart, dist_h3(julia_zero(roots, opts).point, base.point));
        }
    }
    o.require(worst_fd <= 1e-5, "finite differences: max relative error " + sci(worst_fd));
    o.require(worst_restart <= 1e-8, "restarts: max d_H " + sci(worst_restart));
    return o;
}

Outcome geometry_identities() {
    Outcome o;
    Gen gen(801);
    for (int trial = 0; trial < 200; ++trial) {
        // Additive boundary distance along a geodesic, in H2 and H3.
        const PointH2 z = gen.point();
        const PointH2 w = gen.point();
        const auto [a, b] = geodesic_endpoints(z, w);
        const PointH2 p = geodesic_point(z, w, gen.uniform(-2, 2));
        const PointH2 q = geodesic_point(z, w, gen.uniform(-2, 2));
        const double d2 = dist_h2(p, q);
        const CMat2 m = gen.sl2c();
        const PointH3 p3 = act_h3(PointH3::from_h2(p), m);
        const PointH3 q3 = act_h3(PointH3::from_h2(q), m);
        const double d3 = dist_h3(p3, q3);
        for (const auto& end : {a, b}) {
            const double along2 = std::abs(boundary_dist_h2(end, p) - boundary_dist_h2(end, q));
            o.require(std::abs(along2 - d2) <= 1e-10 * (1 + d2), "H2 additivity");
            const BoundaryPoint3 e = act_boundary_h3(
                end.is_infinity() ? BoundaryPoint3::infinity() : BoundaryPoint3::at({*end.value, 0.0}), m);
            const double along3 = std::abs(boundary_dist_h3(p3, e) - boundary_dist_h3(q3, e));
            o.require(std::abs(along3 - d3) <= 1e-8 * (1 + d3), "H3 additivity");
        }

        // cosh d = Minkowski pairing of the lifts.
        const double c = minkowski(to_hyperboloid(z).vec(), to_hyperboloid(w).vec());
        o.require(std::abs(c - std::cosh(dist_h2(z, w))) <= 1e-10 * c, "cosh-Minkowski identity");

        // Centroid computed in the hyperboloid model.
        std::vector<PointH2> pts;
        std::vector<HyperboloidPoint> lifted;
        const int n = static_cast<int>(gen.integer(1, 6));
        for (int i = 0; i < n; ++i) {
            pts.push_back(gen.point());
            lifted.push_back(to_hyperboloid(pts.back()));
        }
        o.require(dist_h2(from_hyperboloid(center_of_mass_hyperboloid(lifted)), center_of_mass_h2(pts)) <= 1e-9,
                  "hyperboloid transfer");

        // Right action of SL2(C) on H3.
        const CMat2 g1 = gen.sl2c();
        const CMat2 g2 = gen.sl2c();
        const PointH3 v = gen.point3();
        o.require(dist_h3(act_h3(act_h3(v, g1), g2), act_h3(v, g1 * g2)) <= 1e-8, "SL2(C) group law");
    }
    return o;
}

Outcome presentation_equivalence() {
    Outcome o;
    Gen gen(901);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<NumericQuadraticFactor> factors;
        std::vector<PointH2> roots;
        const int count = static_cast<int>(gen.integer(1, 6));
        while (static_cast<int>(factors.size()) < count) {
            const double a = gen.uniform(-10, 10);
            factors.push_back({a, a * a / 4 + gen.uniform(0.1, 20)});
            roots.push_back(factors.back().root());
        }
        const PointH2 lemma = center_from_quadratic_factors(factors);
        const PointH2 direct = center_of_mass_h2(roots);
        const PointH2 alt = alt_center_presentation(factors);
        worst = std::max({worst, dist_h2(lemma, direct), dist_h2(lemma, alt), dist_h2(direct, alt)});
    }
    o.require(worst <= 1e-10, "max d_H " + sci(worst));
    return o;
}

Outcome scramble_recover() {
    Outcome o;
    Rng rng(kCorpusSeed);
    int reductions = 0;
    int in_domain = 0;
    int not_above_scrambled = 0;
    int not_above_original = 0;
    for (int i = 0; i < 200; ++i) {
        const BinaryForm original = random_totally_complex_form(rng, 4, 8, 10000);
        const BinaryForm scrambled = transform(original, random_unimodular(rng, 20));
        for (Method m : {Method::centroid, Method::julia}) {
            const ReductionReport r = reduce_form(scrambled, m);
            ++reductions;
            if (in_fundamental_domain(r.reduced_zero, 1e-9)) ++in_domain;
            if (r.height_after <= normalized_height(scrambled)) ++not_above_scrambled;
            if (r.height_after <= normalized_height(original)) ++not_above_original;
        }
    }
    o.require(in_domain == reductions, std::to_string(reductions - in_domain) + " zero points outside F");
    o.require(not_above_scrambled == reductions,
              std::to_string(reductions - not_above_scrambled) + " heights above the scrambled height");
    std::ostringstream s;
    s << (o.ok ? "" : o.detail + "; ") << "height <= pre-scramble height in " << not_above_original << "/" << reductions
      << " (" << 100.0 * not_above_original / reductions << "%)";
    o.detail = s.str();
    return o;
}

}  // namespace

int main() {
    criterion(1, "worked example expansion", 1, worked_example);
    criterion(2, "centroid zero map, exact and float", 1, centroid_example);
    criterion(3, "centroid reduction of the example", 10, [] { return reduction(Method::centroid); });
    criterion(4, "Julia reduction of the example", 100, [] { return reduction(Method::julia); });
    criterion(5, "closed form vs brute-force oracle", 30000, oracle_equivalence);
    criterion(6, "equivariance", 60000, equivariance);
    criterion(7, "gradient certification", 30000, gradient_certification);
    criterion(8, "geometry identities", 30000, geometry_identities);
    criterion(9, "presentation equivalence", 5000, presentation_equivalence);
    criterion(10, "scramble-recover corpus", 300000, scramble_recover);
    return failures == 0 ? 0 : 1;
}
