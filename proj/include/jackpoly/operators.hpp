#pragma once

#include "jackpoly/sparse_poly.hpp"

namespace jackpoly {

// The variable transposition s_ij; i, j 0-based and distinct.
SparsePoly transpose_vars(const SparsePoly& f, int i, int j);

// N_ij f = (f - s_ij f)/(x_i - x_j). The quotient is computed per monomial as
// an exact geometric sum, so no remainder can arise.
SparsePoly divided_difference(const SparsePoly& f, int i, int j);

// Cherednik operator restricted to the variable block [offset, offset+m):
//   ξ_i = α·x_i·∂_i + Σ_{j<i} N_ij·x_j + Σ_{j>i} x_j·N_ij
// with i and the j-sums local to the block. "N_ij·x_j" multiplies by x_j
// first, "x_j·N_ij" applies N_ij first.
SparsePoly cherednik_block(const SparsePoly& f, int i, int offset, int m);

// Cherednik operator on the full variable set; i 0-based.
SparsePoly cherednik(const SparsePoly& f, int i);

// Degree-raising operator Φf(x_1,...,x_n) = x_n·f(x_n,x_1,...,x_{n-1});
// sends the monomial x^η to x^{Φη}.
SparsePoly phi_raise(const SparsePoly& f);

}  // namespace jackpoly
