#include "jackpoly/linalg.hpp"

#include <stdexcept>

namespace jackpoly {

namespace {

// Row echelon form in place; returns the pivot column per pivot row.
std::vector<size_t> echelon(FracMatrix& m) {
    const size_t rows = m.size();
    const size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && m[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[row], m[sel]);
        const AlphaFraction inv = m[row][col].inverse();
        for (size_t c = col; c < cols; ++c) m[row][c] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            const AlphaFraction factor = m[r][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::optional<FracVector> solve_unique(FracMatrix a, FracVector b) {
    const size_t rows = a.size();
    if (rows != b.size()) throw std::invalid_argument("shape mismatch");
    const size_t cols = rows == 0 ? 0 : a[0].size();
    for (size_t r = 0; r < rows; ++r) a[r].push_back(b[r]);
    std::vector<size_t> pivots = echelon(a);
    // Any pivot in the appended column marks inconsistency.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    if (pivots.size() != cols) return std::nullopt;
    FracVector x(cols);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
    return x;
}

FracMatrix invert(FracMatrix m) {
    const size_t n = m.size();
    for (size_t r = 0; r < n; ++r) {
        if (m[r].size() != n) throw std::invalid_argument("matrix not square");
        for (size_t c = 0; c < n; ++c) m[r].push_back(AlphaFraction(r == c ? 1 : 0));
    }
    std::vector<size_t> pivots = echelon(m);
    if (pivots.size() != n || (n > 0 && pivots.back() != n - 1))
        throw std::domain_error("matrix is singular");
    for (size_t r = 0; r < n; ++r)
        if (pivots[r] != r) throw std::domain_error("matrix is singular");
    FracMatrix out(n);
    for (size_t r = 0; r < n; ++r)
        out[r] = FracVector(m[r].begin() + static_cast<long>(n), m[r].end());
    return out;
}

std::vector<FracVector> nullspace(FracMatrix a) {
    const size_t rows = a.size();
    const size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<size_t> pivots = echelon(a);
    std::vector<bool> is_pivot(cols, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<FracVector> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        FracVector v(cols);
        v[free] = AlphaFraction(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace jackpoly
