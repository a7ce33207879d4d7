#include "formred/corpus.hpp"

#include <stdexcept>
#include <vector>

namespace formred {

namespace {

// Dense polynomial in X, ascending powers.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly remainder(Poly num, const Poly& den) {
    while (num.size() >= den.size() && !num.empty()) {
        const Rational factor = num.back() / den.back();
        const std::size_t shift = num.size() - den.size();
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= factor * den[i];
        num.pop_back();
        trim(num);
    }
    return num;
}

int sign_changes(const std::vector<int>& signs) {
    int changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

int count_real_roots(const BinaryForm& form) {
    Poly f(form.coeffs().rbegin(), form.coeffs().rend());
    trim(f);
    if (f.size() <= 1) return 0;
    std::vector<Poly> chain{f};
    Poly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<long>(i));
    chain.push_back(d);
    for (;;) {
        Poly r = remainder(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    std::vector<int> at_plus, at_minus;
    for (const auto& p : chain) {
        const int lead = sgn(p.back());
        at_plus.push_back(lead);
        at_minus.push_back((p.size() - 1) % 2 == 0 ? lead : -lead);
    }
    return sign_changes(at_minus) - sign_changes(at_plus);
}

BinaryForm random_totally_complex_form(Rng& rng, int min_degree, int max_degree, std::int64_t bound) {
    const int lo = (min_degree + 1) / 2;
    const int hi = max_degree / 2;
    if (lo < 1 || hi < lo || bound < 1) throw std::invalid_argument("random_totally_complex_form: empty range");
    const int degree = 2 * static_cast<int>(uniform(rng, lo, hi));
    for (;;) {
        std::vector<Rational> coeffs;
        for (int i = 0; i <= degree; ++i) {
            const bool outer = i == 0 || i == degree;
            coeffs.emplace_back(static_cast<long>(uniform(rng, outer ? 1 : -bound, bound)));
        }
        BinaryForm form(std::move(coeffs));
        if (count_real_roots(form) == 0) return form;
    }
}

UnimodularMatrix random_unimodular(Rng& rng, std::int64_t bound) {
    if (bound < 1) throw std::invalid_argument("random_unimodular: bound must be positive");
    const Integer limit(static_cast<long>(bound));
    for (;;) {
        const Integer a(static_cast<long>(uniform(rng, -bound, bound)));
        const Integer c(static_cast<long>(uniform(rng, -bound, bound)));
        Integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
        if (g != 1) continue;
        // a s + c t = 1, so (b, d) = (-t, s) + k (a, c) all satisfy ad - bc = 1.
        const Integer b0 = -t;
        const Integer d0 = s;
        Integer k_lo = -limit * 4 - 4;
        Integer k_hi = limit * 4 + 4;
        const auto restrict = [&](const Integer& base, const Integer& step) {
            if (step == 0) {
                if (abs(base) > limit) k_hi = k_lo - 1;
                return;
            }
            Integer from = step > 0 ? ceil_div(-limit - base, step) : ceil_div(limit - base, step);
            Integer to = step > 0 ? floor_div(limit - base, step) : floor_div(-limit - base, step);
            if (from > k_lo) k_lo = from;
            if (to < k_hi) k_hi = to;
        };
        restrict(b0, a);
        restrict(d0, c);
        if (k_hi < k_lo) continue;
        const Integer span = k_hi - k_lo;
        const Integer k = k_lo + Integer(static_cast<long>(uniform(rng, 0, span.get_si())));
        return {a, b0 + k * a, c, d0 + k * c};
    }
}

}  // namespace formred
