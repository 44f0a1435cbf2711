#pragma once

#include <string>

#include "jackpoly/alpha_poly.hpp"
#include "jackpoly/rational.hpp"

#include <nlohmann/json_fwd.hpp>

namespace jackpoly {

// Element of the field F = Q(α), stored as a reduced fraction of α-polynomials.
// Canonical form: denominator monic and nonzero, gcd(num, den) = 1, zero is 0/1.
// Equal values always have identical representations.
class AlphaFraction {
public:
    AlphaFraction() : num_(), den_(1) {}
    AlphaFraction(long value) : num_(value), den_(1) {}
    AlphaFraction(Rational value) : num_(std::move(value)), den_(1) {}
    AlphaFraction(AlphaPolynomial numerator) : num_(std::move(numerator)), den_(1) {}

    // Canonical reduced num/den; throws std::domain_error on a zero denominator.
    static AlphaFraction normalized(AlphaPolynomial num, AlphaPolynomial den);
    static AlphaFraction alpha() { return AlphaFraction(AlphaPolynomial::alpha()); }

    const AlphaPolynomial& num() const { return num_; }
    const AlphaPolynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    AlphaFraction operator-() const;
    friend AlphaFraction operator+(const AlphaFraction& a, const AlphaFraction& b);
    friend AlphaFraction operator-(const AlphaFraction& a, const AlphaFraction& b);
    friend AlphaFraction operator*(const AlphaFraction& a, const AlphaFraction& b);
    // Throws std::domain_error when b = 0.
    friend AlphaFraction operator/(const AlphaFraction& a, const AlphaFraction& b);
    AlphaFraction& operator+=(const AlphaFraction& b) { return *this = *this + b; }
    AlphaFraction& operator-=(const AlphaFraction& b) { return *this = *this - b; }
    AlphaFraction& operator*=(const AlphaFraction& b) { return *this = *this * b; }
    AlphaFraction& operator/=(const AlphaFraction& b) { return *this = *this / b; }

    AlphaFraction inverse() const;

    // Throws std::domain_error when the denominator vanishes at a (a pole).
    Rational evaluate_alpha(const Rational& a) const;

    // "(α^2+3α)/(α+1)"-style text: integer-coefficient numerator over
    // integer-coefficient denominator, sums parenthesized.
    std::string str() const;
    std::string latex() const;
    // Parses the plain-text grammar (also accepts "alpha", '*' and '·').
    static AlphaFraction parse(const std::string& text);

    nlohmann::json to_json() const;
    static AlphaFraction from_json(const nlohmann::json& j);

    bool operator==(const AlphaFraction&) const = default;

private:
    // Assembles parts that are already coprime; only rescales to a monic
    // denominator.
    static AlphaFraction from_coprime(AlphaPolynomial num, AlphaPolynomial den);

    AlphaPolynomial num_, den_;
};

// Coefficient of t^k in (1-t)^(-c): the rising factorial c(c+1)···(c+k-1) / k!.
AlphaFraction rising_factorial_coefficient(const AlphaFraction& c, int k);

}  // namespace jackpoly
