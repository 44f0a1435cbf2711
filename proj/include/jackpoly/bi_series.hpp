#pragma once

#include <string>

#include "jackpoly/sparse_poly.hpp"

namespace jackpoly {

// Total-degree-truncated power series in two variable sets x_1..x_nx and
// y_1..y_ny, stored as a sparse polynomial in nx+ny variables with x first.
// The cap bounds the x-total-degree; every kernel built here is bi-homogeneous
// (x-degree = y-degree on each term), so the y-degree is bounded too.
class TruncatedBiSeries {
public:
    TruncatedBiSeries(int nx, int ny, int cap)
        : nx_(nx), ny_(ny), cap_(cap), terms_(nx + ny) {}

    static TruncatedBiSeries one(int nx, int ny, int cap);

    // Expansion of (1 - x_i·y_j)^(-c) to degree cap: Σ_k rf(c,k)·x_i^k·y_j^k.
    static TruncatedBiSeries binomial_factor(int nx, int ny, const AlphaFraction& c, int i, int j,
                                             int cap);

    // Ω = ∏_i 1/(1-x_i·y_i) · ∏_{i,j} 1/(1-x_i·y_j)^(1/α), truncated.
    // Factor order: diagonal first, then row-major.
    static TruncatedBiSeries omega_kernel(int n, int cap);

    // ∏_{i<=nx, j<=ny} (1 - x_i·y_j)^(-c), truncated.
    static TruncatedBiSeries symmetric_kernel(int nx, int ny, const AlphaFraction& c, int cap);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int cap() const { return cap_; }
    const SparsePoly& terms() const { return terms_; }

    // Over-cap terms are dropped eagerly.
    TruncatedBiSeries multiply(const TruncatedBiSeries& other) const;

    // The x-polynomial multiplying y^gamma; throws std::domain_error when
    // |gamma| exceeds the cap.
    SparsePoly coefficient_of_y(const ExponentVector& gamma) const;

    // Exchanges the two variable sets; requires nx = ny.
    TruncatedBiSeries swap_xy() const;

    TruncatedBiSeries truncated(int new_cap) const;

    int x_degree(const ExponentVector& e) const;
    int y_degree(const ExponentVector& e) const;

    bool operator==(const TruncatedBiSeries&) const = default;

    std::string str() const;

private:
    int nx_, ny_, cap_;
    SparsePoly terms_;
};

}  // namespace jackpoly
