#include "formred/forms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace formred {

namespace {

using Poly = std::vector<Rational>;  // ascending powers of X, Z implicit

Poly multiply(const Poly& lhs, const Poly& rhs) {
    Poly out(lhs.size() + rhs.size() - 1, Rational(0));
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.size(); ++j) out[i + j] += lhs[i] * rhs[j];
    }
    return out;
}

std::vector<Poly> powers(const Poly& base, int max_exp) {
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(max_exp) + 1);
    out.push_back(Poly{Rational(1)});
    for (int k = 1; k <= max_exp; ++k) out.push_back(multiply(out.back(), base));
    return out;
}

}  // namespace

UnimodularMatrix::UnimodularMatrix(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ != 1) throw std::invalid_argument("matrix determinant is not 1");
}

UnimodularMatrix UnimodularMatrix::translation(const Integer& n) { return {1, n, 0, 1}; }

UnimodularMatrix UnimodularMatrix::inversion() { return {0, -1, 1, 0}; }

UnimodularMatrix UnimodularMatrix::inverse() const { return {d_, -b_, -c_, a_}; }

bool UnimodularMatrix::is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

bool UnimodularMatrix::projectively_equal(const UnimodularMatrix& other) const {
    if (*this == other) return true;
    return a_ == -other.a_ && b_ == -other.b_ && c_ == -other.c_ && d_ == -other.d_;
}

UnimodularMatrix operator*(const UnimodularMatrix& lhs, const UnimodularMatrix& rhs) {
    return {lhs.a_ * rhs.a_ + lhs.b_ * rhs.c_, lhs.a_ * rhs.b_ + lhs.b_ * rhs.d_,
            lhs.c_ * rhs.a_ + lhs.d_ * rhs.c_, lhs.c_ * rhs.b_ + lhs.d_ * rhs.d_};
}

bool operator==(const UnimodularMatrix& lhs, const UnimodularMatrix& rhs) {
    return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_ && lhs.c_ == rhs.c_ && lhs.d_ == rhs.d_;
}

QuadraticFactor::QuadraticFactor(Rational a_coeff, Rational b_coeff) : a(std::move(a_coeff)), b(std::move(b_coeff)) {
    if (discriminant_gap() <= 0) throw std::invalid_argument("quadratic factor has real roots");
}

double QuadraticFactor::d() const { return std::sqrt(discriminant_gap().get_d()); }

BinaryForm::BinaryForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 3) throw std::invalid_argument("binary form needs degree >= 2");
    for (auto& c : coeffs_) c.canonicalize();
    if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; }))
        throw std::invalid_argument("zero form");
}

bool BinaryForm::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

Rational evaluate(const BinaryForm& form, const Rational& x_in, const Rational& z_in) {
    Rational x = x_in;
    Rational z = z_in;
    x.canonicalize();
    z.canonicalize();
    // Homogeneous Horner: ((c0 x + c1 z) x + c2 z^2) ...
    Rational zpow = 1;
    const auto& c = form.coeffs();
    Rational acc = c[0];
    for (std::size_t i = 1; i < c.size(); ++i) {
        zpow *= z;
        acc = acc * x + c[i] * zpow;
    }
    return acc;
}

BinaryForm transform(const BinaryForm& form, const UnimodularMatrix& m) {
    const int n = form.degree();
    // X -> aX + bZ and Z -> cX + dZ, dehomogenised at Z = 1.
    const auto first = powers(Poly{Rational(m.b()), Rational(m.a())}, n);
    const auto second = powers(Poly{Rational(m.d()), Rational(m.c())}, n);
    Poly acc(static_cast<std::size_t>(n) + 1, Rational(0));
    const auto& c = form.coeffs();
    for (int i = 0; i <= n; ++i) {
        if (c[i] == 0) continue;
        const Poly term = multiply(first[n - i], second[i]);
        for (std::size_t k = 0; k < term.size(); ++k) acc[k] += c[i] * term[k];
    }
    std::reverse(acc.begin(), acc.end());
    return BinaryForm(std::move(acc));
}

Rational height(const BinaryForm& form) {
    Rational best = 0;
    for (const auto& c : form.coeffs()) best = std::max(best, Rational(abs(c)));
    return best;
}

BinaryForm primitive_part(const BinaryForm& form) {
    Integer den_lcm = 1;
    for (const auto& c : form.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    Integer num_gcd = 0;
    for (const auto& c : form.coeffs()) {
        const Integer scaled = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    std::vector<Rational> out;
    out.reserve(form.coeffs().size());
    for (const auto& c : form.coeffs()) out.emplace_back(Integer(c.get_num() * (den_lcm / c.get_den()) / num_gcd));
    return BinaryForm(std::move(out));
}

Integer normalized_height(const BinaryForm& form) { return height(primitive_part(form)).get_num(); }

BinaryForm from_quadratic_factors(std::span<const QuadraticFactor> factors) {
    if (factors.empty()) throw std::invalid_argument("no quadratic factors");
    Poly acc{Rational(1)};
    for (const auto& f : factors) acc = multiply(acc, Poly{f.b, f.a, Rational(1)});
    std::reverse(acc.begin(), acc.end());
    return BinaryForm(std::move(acc));
}

Rational quadratic_discriminant(const BinaryForm& quadratic) {
    if (quadratic.degree() != 2) throw std::invalid_argument("not a quadratic form");
    const auto& c = quadratic.coeffs();
    return c[1] * c[1] - 4 * c[0] * c[2];
}

std::string serialize(const BinaryForm& form) {
    std::string out;
    for (const auto& c : form.coeffs()) {
        if (!out.empty()) out += ',';
        out += c.get_str();
    }
    return out;
}

std::string to_polynomial_string(const BinaryForm& form) {
    const int n = form.degree();
    std::string out;
    for (int i = 0; i <= n; ++i) {
        const Rational& c = form.coeffs()[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string mono;
        const int px = n - i;
        if (px > 0) mono += px == 1 ? "X" : "X^" + std::to_string(px);
        if (i > 0) {
            if (!mono.empty()) mono += '*';
            mono += i == 1 ? "Z" : "Z^" + std::to_string(i);
        }
        if (mag != 1 || mono.empty()) {
            out += mag.get_str();
            if (!mono.empty()) out += '*';
        }
        out += mono;
    }
    return out;
}

std::string to_string(const UnimodularMatrix& m) {
    return "[[" + m.a().get_str() + "," + m.b().get_str() + "],[" + m.c().get_str() + "," + m.d().get_str() + "]]";
}

}  // namespace formred
