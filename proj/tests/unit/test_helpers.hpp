#pragma once

#include <random>

#include "jackpoly/alpha_fraction.hpp"
#include "jackpoly/sparse_poly.hpp"

namespace jackpoly::testing {

inline AlphaPolynomial random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::vector<Rational> cs(deg(rng) + 1);
    for (auto& c : cs) c = Rational(coeff(rng));
    return AlphaPolynomial::from_coefficients(std::move(cs));
}

inline AlphaPolynomial random_nonzero_poly(std::mt19937& rng, int max_degree) {
    while (true) {
        AlphaPolynomial p = random_poly(rng, max_degree);
        if (!p.is_zero()) return p;
    }
}

inline AlphaFraction random_fraction(std::mt19937& rng, int max_degree = 2) {
    return AlphaFraction::normalized(random_poly(rng, max_degree),
                                     random_nonzero_poly(rng, max_degree));
}

inline SparsePoly random_sparse(std::mt19937& rng, int n, int max_degree, int max_terms = 5) {
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_degree);
    SparsePoly p(n);
    const int count = terms(rng);
    for (int t = 0; t < count; ++t) {
        ExponentVector e(n);
        for (auto& x : e) x = exp(rng);
        p.add_term(e, random_fraction(rng, 1));
    }
    return p;
}

// Shorthand for tests: α as a fraction and exact parse.
inline AlphaFraction frac(const std::string& text) { return AlphaFraction::parse(text); }

}  // namespace jackpoly::testing
