#pragma once

#include <string>
#include <vector>

#include "jackpoly/alpha_fraction.hpp"
#include "jackpoly/permutation.hpp"

namespace jackpoly {

// Vector of nonnegative integer parts. A partition is the weakly decreasing
// special case; both always carry the full ambient length n (trailing zeros
// included).
using Composition = std::vector<int>;

bool is_composition(const Composition& eta);
bool is_partition(const Composition& eta);
// |η| = Σ η_i.
int weight(const Composition& eta);
std::string composition_str(const Composition& eta);  // "(a,b,c)"
Composition parse_composition(const std::string& text, char sep = ',');

// Diagram cell statistics. Cells are 1-based pairs (row i, column j) with
// 1 <= j <= η_i. Legs and colegs split into lower (k > i) and upper (k < i)
// counts; for a partition every upper leg is 0 and leg/coleg match the
// classical values.
struct CellStats {
    int arm = 0;        // η_i - j
    int coarm = 0;      // j - 1
    int lower_leg = 0;  // #{k > i : j <= η_k <= η_i}
    int upper_leg = 0;  // #{k < i : j <= η_k + 1 <= η_i}
    int lower_coleg = 0;  // #{k > i : η_k > η_i}
    int upper_coleg = 0;  // #{k < i : η_k >= η_i}
    int leg() const { return lower_leg + upper_leg; }
    int coleg() const { return lower_coleg + upper_coleg; }
};

// Throws std::out_of_range when (i, j) is not a cell of the diagram.
CellStats cell_stats(const Composition& eta, int i, int j);

// The hook-type products over all diagram cells; all 1 on the empty diagram.
//   d:  ∏ α(arm+1) + leg + 1
//   dp: ∏ α(arm+1) + leg
//   e:  ∏ α(coarm+1) + n - coleg
//   f = d·dp, the squared norm of the integral polynomial.
struct CompositionConstants {
    AlphaFraction d, dp, e, f;
};
CompositionConstants composition_constants(const Composition& eta);

// Partition-only constants behind the classical norm and evaluation formulas:
//   b: ∏ α·coarm + n - coleg      c: ∏ α·arm + leg + 1
//   cp: ∏ α(arm+1) + leg          j = c·cp
struct PartitionConstants {
    AlphaFraction b, c, cp, j;
};
// Throws std::invalid_argument unless lambda is a partition.
PartitionConstants partition_constants(const Composition& lambda);

// Spectral vector η̄ with η̄_i = α·η_i - (k'_i + k''_i), where
// k'_i = #{k < i : η_k >= η_i} and k''_i = #{k > i : η_k > η_i}.
std::vector<AlphaFraction> eigenvalue_vector(const Composition& eta);

// The sorted partition η⁺ together with the minimal-length permutation w
// satisfying η = w·η⁺ under (w·v)_{w(i)} = v_i (stable sort: equal parts keep
// their relative order).
struct SortedComposition {
    Composition partition;
    Permutation w;
};
SortedComposition sort_to_partition(const Composition& eta);

enum class DominanceRelation { Greater, Less, Equal, Incomparable };

// Dominance order within a fixed degree: partition dominance of the sorted
// shapes, ties broken by Bruhat comparison of the minimal permutations
// (smaller permutation = more dominant). Throws std::invalid_argument on a
// length or degree mismatch.
DominanceRelation dominance_compare(const Composition& eta, const Composition& zeta);

// All compositions of d into n nonnegative parts, lexicographically ascending.
std::vector<Composition> enumerate_compositions(int n, int d);
// All partitions of d with at most n parts, as length-n vectors, in
// descending lex order.
std::vector<Composition> enumerate_partitions(int n, int d);
// All distinct rearrangements of the parts of lambda, ascending lex order.
std::vector<Composition> distinct_permutations(const Composition& lambda);

// Index action of the raising operator: (η_2,...,η_n,η_1+1).
Composition phi_index(const Composition& eta);

}  // namespace jackpoly
