#pragma once

#include <string>
#include <vector>

namespace jackpoly {

// Permutation of {0,...,n-1} in one-line notation: perm[i] = w(i).
// Vectors are moved by the rule (w·v)_{w(i)} = v_i.
class Permutation {
public:
    explicit Permutation(int n);
    // Throws std::invalid_argument unless the entries are a bijection.
    static Permutation from_images(std::vector<int> images);
    // Adjacent transposition s_{i,i+1}, 0-based i.
    static Permutation adjacent_transposition(int n, int i);

    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }
    // 1-based one-line notation, e.g. (2,1,3).
    std::vector<int> one_line() const;

    Permutation inverse() const;
    // Function composition: (u*v)(i) = u(v(i)).
    friend Permutation operator*(const Permutation& u, const Permutation& v);

    // Number of inversions = Coxeter length.
    int length() const;

    template <typename T>
    std::vector<T> act(const std::vector<T>& v) const {
        std::vector<T> out(v.size());
        for (size_t i = 0; i < v.size(); ++i) out[images_[i]] = v[i];
        return out;
    }

    bool is_identity() const;
    bool operator==(const Permutation&) const = default;
    std::string str() const;

private:
    std::vector<int> images_;
};

// Strong Bruhat order via the sorted-prefix (rank matrix) dominance criterion.
bool bruhat_leq(const Permutation& u, const Permutation& w);

}  // namespace jackpoly
