#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jackpoly/rational.hpp"

namespace jackpoly {

// Univariate polynomial in the parameter α with rational coefficients.
// Canonical form: no trailing zero coefficient; zero is the empty sequence.
class AlphaPolynomial {
public:
    AlphaPolynomial() = default;
    AlphaPolynomial(long value) : AlphaPolynomial(Rational(value)) {}
    AlphaPolynomial(Rational value);

    // The monomial α.
    static AlphaPolynomial alpha();
    // coeffs[k] multiplies α^k; trailing zeros are trimmed.
    static AlphaPolynomial from_coefficients(std::vector<Rational> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }
    Rational coefficient(int k) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    AlphaPolynomial operator-() const;
    friend AlphaPolynomial operator+(const AlphaPolynomial& a, const AlphaPolynomial& b);
    friend AlphaPolynomial operator-(const AlphaPolynomial& a, const AlphaPolynomial& b);
    friend AlphaPolynomial operator*(const AlphaPolynomial& a, const AlphaPolynomial& b);
    friend AlphaPolynomial operator*(const AlphaPolynomial& a, const Rational& c);

    // Euclidean division, b != 0.
    static std::pair<AlphaPolynomial, AlphaPolynomial> divrem(const AlphaPolynomial& a,
                                                              const AlphaPolynomial& b);
    // Exact quotient; throws std::logic_error if the division leaves a remainder.
    static AlphaPolynomial exact_div(const AlphaPolynomial& a, const AlphaPolynomial& b);
    // Monic gcd over Q; gcd(0, 0) = 0.
    static AlphaPolynomial gcd(const AlphaPolynomial& a, const AlphaPolynomial& b);

    Rational evaluate(const Rational& a) const;

    // Positive rational c with poly = c * (primitive integer-coefficient part);
    // 0 for the zero polynomial. Sign stays with the coefficients.
    Rational content() const;

    // Plain text with α, descending powers, e.g. "α^2+3α" or "(3/2)α-1/2".
    std::string str() const;
    std::string latex() const;

    bool operator==(const AlphaPolynomial&) const = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace jackpoly
