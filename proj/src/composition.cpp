#include "jackpoly/composition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jackpoly {

bool is_composition(const Composition& eta) {
    return std::all_of(eta.begin(), eta.end(), [](int p) { return p >= 0; });
}

bool is_partition(const Composition& eta) {
    if (!is_composition(eta)) return false;
    return std::is_sorted(eta.begin(), eta.end(), std::greater<int>());
}

int weight(const Composition& eta) { return std::accumulate(eta.begin(), eta.end(), 0); }

std::string composition_str(const Composition& eta) {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < eta.size(); ++i) out << (i ? "," : "") << eta[i];
    out << ')';
    return out.str();
}

Composition parse_composition(const std::string& text, char sep) {
    std::string body = text;
    if (!body.empty() && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    Composition eta;
    std::istringstream in(body);
    std::string item;
    while (std::getline(in, item, sep)) {
        size_t used = 0;
        int value = std::stoi(item, &used);
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size() || value < 0)
            throw std::invalid_argument("malformed composition: '" + text + "'");
        eta.push_back(value);
    }
    if (eta.empty()) throw std::invalid_argument("empty composition");
    return eta;
}

CellStats cell_stats(const Composition& eta, int i, int j) {
    const int n = static_cast<int>(eta.size());
    if (i < 1 || i > n || j < 1 || j > eta[i - 1]) throw std::out_of_range("cell outside diagram");
    CellStats s;
    const int row = eta[i - 1];
    s.arm = row - j;
    s.coarm = j - 1;
    for (int k = 1; k <= n; ++k) {
        const int other = eta[k - 1];
        if (k > i) {
            if (j <= other && other <= row) ++s.lower_leg;
            if (other > row) ++s.lower_coleg;
        } else if (k < i) {
            if (j <= other + 1 && other + 1 <= row) ++s.upper_leg;
            if (other >= row) ++s.upper_coleg;
        }
    }
    return s;
}

CompositionConstants composition_constants(const Composition& eta) {
    if (!is_composition(eta)) throw std::invalid_argument("negative part");
    const AlphaFraction alpha = AlphaFraction::alpha();
    const int n = static_cast<int>(eta.size());
    CompositionConstants out{AlphaFraction(1), AlphaFraction(1), AlphaFraction(1),
                             AlphaFraction(1)};
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= eta[i - 1]; ++j) {
            CellStats s = cell_stats(eta, i, j);
            out.d *= alpha * AlphaFraction(s.arm + 1) + AlphaFraction(s.leg() + 1);
            out.dp *= alpha * AlphaFraction(s.arm + 1) + AlphaFraction(s.leg());
            out.e *= alpha * AlphaFraction(s.coarm + 1) + AlphaFraction(n - s.coleg());
        }
    }
    out.f = out.d * out.dp;
    return out;
}

PartitionConstants partition_constants(const Composition& lambda) {
    if (!is_partition(lambda)) throw std::invalid_argument("not a partition");
    const AlphaFraction alpha = AlphaFraction::alpha();
    const int n = static_cast<int>(lambda.size());
    PartitionConstants out{AlphaFraction(1), AlphaFraction(1), AlphaFraction(1), AlphaFraction(1)};
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= lambda[i - 1]; ++j) {
            CellStats s = cell_stats(lambda, i, j);
            out.b *= alpha * AlphaFraction(s.coarm) + AlphaFraction(n - s.coleg());
            out.c *= alpha * AlphaFraction(s.arm) + AlphaFraction(s.leg() + 1);
            out.cp *= alpha * AlphaFraction(s.arm + 1) + AlphaFraction(s.leg());
        }
    }
    out.j = out.c * out.cp;
    return out;
}

std::vector<AlphaFraction> eigenvalue_vector(const Composition& eta) {
    if (!is_composition(eta)) throw std::invalid_argument("negative part");
    const int n = static_cast<int>(eta.size());
    std::vector<AlphaFraction> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        int drop = 0;
        for (int k = 0; k < i; ++k)
            if (eta[k] >= eta[i]) ++drop;
        for (int k = i + 1; k < n; ++k)
            if (eta[k] > eta[i]) ++drop;
        out.push_back(AlphaFraction::alpha() * AlphaFraction(eta[i]) - AlphaFraction(drop));
    }
    return out;
}

SortedComposition sort_to_partition(const Composition& eta) {
    if (!is_composition(eta)) throw std::invalid_argument("negative part");
    const int n = static_cast<int>(eta.size());
    // Stable order: part value descending, original position ascending.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return eta[a] > eta[b]; });
    Composition lambda(n);
    std::vector<int> images(n);
    for (int slot = 0; slot < n; ++slot) {
        lambda[slot] = eta[order[slot]];
        images[slot] = order[slot];  // slot "slot" of the partition lands at this position
    }
    return {std::move(lambda), Permutation::from_images(std::move(images))};
}

namespace {

// Strict partition dominance comparison of equal-weight partitions.
DominanceRelation partition_dominance(const Composition& a, const Composition& b) {
    bool a_ge = true, b_ge = true;
    int pa = 0, pb = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        pa += a[i];
        pb += b[i];
        if (pa < pb) a_ge = false;
        if (pb < pa) b_ge = false;
    }
    if (a_ge && b_ge) return DominanceRelation::Equal;
    if (a_ge) return DominanceRelation::Greater;
    if (b_ge) return DominanceRelation::Less;
    return DominanceRelation::Incomparable;
}

}  // namespace

DominanceRelation dominance_compare(const Composition& eta, const Composition& zeta) {
    if (eta.size() != zeta.size()) throw std::invalid_argument("length mismatch");
    if (weight(eta) != weight(zeta)) throw std::invalid_argument("degree mismatch");
    if (eta == zeta) return DominanceRelation::Equal;
    SortedComposition se = sort_to_partition(eta);
    SortedComposition sz = sort_to_partition(zeta);
    if (se.partition != sz.partition) return partition_dominance(se.partition, sz.partition);
    // Same shape: smaller minimal permutation dominates.
    if (bruhat_leq(se.w, sz.w)) return DominanceRelation::Greater;
    if (bruhat_leq(sz.w, se.w)) return DominanceRelation::Less;
    return DominanceRelation::Incomparable;
}

std::vector<Composition> enumerate_compositions(int n, int d) {
    if (n < 1 || d < 0) throw std::invalid_argument("bad enumeration parameters");
    std::vector<Composition> out;
    Composition current(n, 0);
    // Lexicographic by construction: first position varies slowest.
    auto recurse = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n - 1) {
            current[pos] = remaining;
            out.push_back(current);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            current[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    recurse(recurse, 0, d);
    return out;
}

std::vector<Composition> enumerate_partitions(int n, int d) {
    if (n < 1 || d < 0) throw std::invalid_argument("bad enumeration parameters");
    std::vector<Composition> out;
    Composition current(n, 0);
    auto recurse = [&](auto&& self, int pos, int remaining, int max_part) -> void {
        if (pos == n) {
            if (remaining == 0) out.push_back(current);
            return;
        }
        for (int v = std::min(remaining, max_part); v >= 0; --v) {
            current[pos] = v;
            self(self, pos + 1, remaining - v, v);
            if (v == 0) break;
        }
        current[pos] = 0;
    };
    recurse(recurse, 0, d, d);
    return out;
}

std::vector<Composition> distinct_permutations(const Composition& lambda) {
    Composition sorted = lambda;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Composition> out;
    do {
        out.push_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return out;
}

Composition phi_index(const Composition& eta) {
    Composition out(eta.begin() + 1, eta.end());
    out.push_back(eta[0] + 1);
    return out;
}

}  // namespace jackpoly
