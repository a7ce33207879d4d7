#pragma once

// Binary forms with exact rational coefficients and the right action of
// SL2(Z) on them by linear change of variables.

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace formred {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer 2x2 matrix of determinant one.
class UnimodularMatrix {
public:
    UnimodularMatrix() : a_(1), b_(0), c_(0), d_(1) {}
    /// Throws std::invalid_argument unless ad - bc = 1.
    UnimodularMatrix(Integer a, Integer b, Integer c, Integer d);

    static UnimodularMatrix identity() { return {}; }
    /// [[1, n], [0, 1]]: acts on points by z -> z - n and on forms by X -> X + nZ.
    static UnimodularMatrix translation(const Integer& n);
    /// [[0, -1], [1, 0]]: acts on points by z -> -1/z.
    static UnimodularMatrix inversion();

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }
    const Integer& c() const { return c_; }
    const Integer& d() const { return d_; }

    UnimodularMatrix inverse() const;
    bool is_identity() const;
    /// Equal up to the sign of the whole matrix (both act identically on H2).
    bool projectively_equal(const UnimodularMatrix& other) const;

    friend UnimodularMatrix operator*(const UnimodularMatrix& lhs, const UnimodularMatrix& rhs);
    friend bool operator==(const UnimodularMatrix& lhs, const UnimodularMatrix& rhs);

private:
    Integer a_, b_, c_, d_;
};

/// Monic-in-spirit real quadratic X^2 + a XZ + b Z^2 with 4b - a^2 > 0.
struct QuadraticFactor {
    Rational a;
    Rational b;

    /// Throws std::invalid_argument if the factor has real roots.
    QuadraticFactor(Rational a_coeff, Rational b_coeff);

    Rational discriminant_gap() const { return 4 * b - a * a; }
    /// d = sqrt(4b - a^2).
    double d() const;
};

/// F(X, Z) = sum_i c_i X^(n-i) Z^i, coefficients stored in descending powers of X.
///
/// Forms read from user input always have c_0 != 0. A unimodular transform of a
/// form with a rational root can move that root to infinity; such results keep
/// their homogeneous degree and simply carry c_0 == 0.
class BinaryForm {
public:
    /// Throws std::invalid_argument for fewer than three coefficients or the zero form.
    explicit BinaryForm(std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const { return coeffs_.front(); }
    bool is_integral() const;

    friend bool operator==(const BinaryForm& lhs, const BinaryForm& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

Rational evaluate(const BinaryForm& form, const Rational& x, const Rational& z);

/// F^M(X, Z) = F(aX + bZ, cX + dZ).
BinaryForm transform(const BinaryForm& form, const UnimodularMatrix& m);

/// max_i |c_i|, denominators left in place.
Rational height(const BinaryForm& form);

/// The primitive integral multiple of the form (coprime integer coefficients,
/// positive rational scale).
BinaryForm primitive_part(const BinaryForm& form);

/// Height of primitive_part(form); this is the height used in reports.
Integer normalized_height(const BinaryForm& form);

/// prod_j (X^2 + a_j XZ + b_j Z^2).
BinaryForm from_quadratic_factors(std::span<const QuadraticFactor> factors);

/// Discriminant b^2 - 4ac of a quadratic form aX^2 + bXZ + cZ^2.
Rational quadratic_discriminant(const BinaryForm& quadratic);

/// Accepts a comma separated coefficient list in descending powers of X
/// ("1,0,1", entries may be "p/q") or polynomial syntax in X and optionally Z
/// ("x^6 - 24*x^5 + 306*x^4", "X^2 + 3/2*X*Z + Z^2"). Throws ParseError.
BinaryForm parse_form(std::string_view text);

/// Canonical coefficient list, e.g. "1,0,1".
std::string serialize(const BinaryForm& form);

/// Human readable homogeneous polynomial, e.g. "X^2 + Z^2".
std::string to_polynomial_string(const BinaryForm& form);

std::string to_string(const UnimodularMatrix& m);

}  // namespace formred
