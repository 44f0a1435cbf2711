#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "jackpoly/alpha_fraction.hpp"
#include "jackpoly/exponent.hpp"

#include <nlohmann/json_fwd.hpp>

namespace jackpoly {

// Sparse multivariate polynomial in a fixed number of variables over Q(α).
// Canonical: no stored zero coefficient, terms ordered graded-lexicographically.
class SparsePoly {
public:
    using TermMap = std::map<ExponentVector, AlphaFraction, GradedLexLess>;

    explicit SparsePoly(int n) : n_(n) {}

    static SparsePoly one(int n) { return monomial(n, ExponentVector(n, 0)); }
    static SparsePoly monomial(int n, ExponentVector exps, AlphaFraction coeff = AlphaFraction(1));
    // x_i, 0-based.
    static SparsePoly variable(int n, int i);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Accumulating insert; drops the entry when the sum cancels.
    void add_term(const ExponentVector& exps, const AlphaFraction& coeff);
    // Zero when the monomial is absent.
    AlphaFraction coefficient(const ExponentVector& exps) const;

    SparsePoly operator-() const;
    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(const SparsePoly& a, const AlphaFraction& c);
    SparsePoly& operator+=(const SparsePoly& b) { return *this = *this + b; }
    SparsePoly& operator-=(const SparsePoly& b) { return *this = *this - b; }
    SparsePoly& operator*=(const SparsePoly& b) { return *this = *this * b; }

    bool operator==(const SparsePoly&) const = default;

    // ∂f/∂x_i, 0-based; throws std::out_of_range on a bad index.
    SparsePoly partial_derivative(int i) const;

    AlphaFraction evaluate(std::span<const AlphaFraction> point) const;
    // Specialization at x = (1,...,1): the sum of all coefficients.
    AlphaFraction eval_ones() const;

    // -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    SparsePoly homogeneous_component(int d) const;

    // Exponents move with the variables: position perm[i] receives slot i.
    SparsePoly permute_vars(const std::vector<int>& perm) const;
    // Kills every term with a positive power of x_i (substitutes x_i = 0).
    SparsePoly set_var_zero(int i) const;
    // Removes the last variable; requires it to have exponent 0 everywhere.
    SparsePoly drop_last_var() const;
    // Invariance under all adjacent variable transpositions.
    bool is_symmetric() const;

    // Terms in descending graded-lex order, e.g. "(α+2)·x2". Default variable
    // names are x1..xn.
    std::string str(const std::vector<std::string>& names = {}) const;
    std::string latex(const std::vector<std::string>& names = {}) const;

    nlohmann::json to_json() const;
    static SparsePoly from_json(const nlohmann::json& j);

private:
    int n_;
    TermMap terms_;
};

}  // namespace jackpoly
