#pragma once

#include <optional>
#include <vector>

#include "jackpoly/alpha_fraction.hpp"

namespace jackpoly {

using FracVector = std::vector<AlphaFraction>;
using FracMatrix = std::vector<FracVector>;

// Solution of A·x = b when it exists and is unique; nullopt when the system
// is inconsistent or underdetermined. A may have more rows than columns.
std::optional<FracVector> solve_unique(FracMatrix a, FracVector b);

// Inverse of a square matrix; throws std::domain_error when singular.
FracMatrix invert(FracMatrix m);

// Basis of the nullspace of A (one vector per free column).
std::vector<FracVector> nullspace(FracMatrix a);

}  // namespace jackpoly
