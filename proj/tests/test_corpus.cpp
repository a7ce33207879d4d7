#include "formred/corpus.hpp"
#include "formred/roots.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace formred;
using formred::testing::form_of;

TEST_CASE("Sturm counts") {
    CHECK(count_real_roots(form_of({1, 0, 1})) == 0);
    CHECK(count_real_roots(form_of({1, 0, -1})) == 2);
    CHECK(count_real_roots(form_of({1, -2, 1})) == 1);                // (X - 1)^2, distinct roots
    CHECK(count_real_roots(form_of({1, -2, 1, 2, -2})) == 2);         // (X^2 - 2X + 2)(X^2 - 1)
    CHECK(count_real_roots(form_of({1, 0, -5, 0, 4})) == 4);          // (X^2 - 1)(X^2 - 4)
    CHECK(count_real_roots(testing::sextic()) == 0);
    CHECK(count_real_roots(form_of({1, 0, 0, -1})) == 1);
}

TEST_CASE("Sturm counts agree with the root finder") {
    formred::testing::Gen gen(91);
    for (int trial = 0; trial < 100; ++trial) {
        const BinaryForm f = gen.integer_form(static_cast<int>(gen.integer(2, 8)), 50);
        const auto roots = complex_roots(f);
        std::vector<double> real;
        for (Complex r : roots)
            if (std::abs(r.imag()) <= 1e-6 * (1 + std::abs(r))) real.push_back(r.real());
        std::sort(real.begin(), real.end());
        const auto last = std::unique(real.begin(), real.end(), [](double a, double b) { return std::abs(a - b) < 1e-6; });
        CHECK(count_real_roots(f) == static_cast<int>(last - real.begin()));
    }
}

TEST_CASE("random totally complex forms") {
    Rng rng(92);
    for (int trial = 0; trial < 200; ++trial) {
        const BinaryForm f = random_totally_complex_form(rng, 4, 8, 10000);
        CHECK(f.degree() % 2 == 0);
        CHECK(f.degree() >= 4);
        CHECK(f.degree() <= 8);
        CHECK(f.is_integral());
        CHECK(height(f) <= 10000);
        CHECK(f.coeffs().front() > 0);
        CHECK(f.coeffs().back() > 0);
        CHECK(count_real_roots(f) == 0);
    }
    Rng a(7), b(7);
    for (int trial = 0; trial < 20; ++trial) CHECK(random_totally_complex_form(a) == random_totally_complex_form(b));
}

TEST_CASE("random unimodular matrices") {
    Rng rng(93);
    bool nontrivial = false;
    for (int trial = 0; trial < 500; ++trial) {
        const UnimodularMatrix m = random_unimodular(rng, 20);
        CHECK(m.a() * m.d() - m.b() * m.c() == 1);
        for (const Integer* e : {&m.a(), &m.b(), &m.c(), &m.d()}) CHECK(abs(*e) <= 20);
        nontrivial = nontrivial || abs(m.c()) > 5;
    }
    CHECK(nontrivial);
}
