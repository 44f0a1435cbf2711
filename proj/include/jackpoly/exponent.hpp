#pragma once

#include <numeric>
#include <vector>

namespace jackpoly {

// Exponent vector of a monomial x_1^{e_1}···x_n^{e_n}; all entries >= 0.
using ExponentVector = std::vector<int>;

inline int total_degree(const ExponentVector& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

// Graded lexicographic order: total degree first, then lexicographic.
// The canonical term order for all stored polynomials and rendered output.
struct GradedLexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

}  // namespace jackpoly
