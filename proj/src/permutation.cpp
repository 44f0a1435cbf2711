#include "jackpoly/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jackpoly {

Permutation::Permutation(int n) : images_(n) { std::iota(images_.begin(), images_.end(), 0); }

Permutation Permutation::from_images(std::vector<int> images) {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 0 || v >= static_cast<int>(images.size()) || seen[v])
            throw std::invalid_argument("not a permutation");
        seen[v] = true;
    }
    Permutation p(0);
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::adjacent_transposition(int n, int i) {
    if (i < 0 || i + 1 >= n) throw std::out_of_range("transposition index");
    Permutation p(n);
    std::swap(p.images_[i], p.images_[i + 1]);
    return p;
}

std::vector<int> Permutation::one_line() const {
    std::vector<int> out(images_.size());
    for (size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
    return out;
}

Permutation Permutation::inverse() const {
    Permutation p(n());
    for (int i = 0; i < n(); ++i) p.images_[images_[i]] = i;
    return p;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.n() != v.n()) throw std::invalid_argument("size mismatch");
    Permutation p(u.n());
    for (int i = 0; i < u.n(); ++i) p.images_[i] = u.images_[v.images_[i]];
    return p;
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (images_[i] > images_[j]) ++inv;
    return inv;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < n(); ++i)
        if (images_[i] != i) return false;
    return true;
}

std::string Permutation::str() const {
    std::ostringstream out;
    out << '(';
    for (int i = 0; i < n(); ++i) out << (i ? "," : "") << images_[i] + 1;
    out << ')';
    return out.str();
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
    if (u.n() != w.n()) throw std::invalid_argument("size mismatch");
    const int n = u.n();
    std::vector<int> pu, pw;
    pu.reserve(n);
    pw.reserve(n);
    for (int i = 0; i < n - 1; ++i) {
        pu.insert(std::upper_bound(pu.begin(), pu.end(), u(i)), u(i));
        pw.insert(std::upper_bound(pw.begin(), pw.end(), w(i)), w(i));
        for (int k = 0; k <= i; ++k)
            if (pu[k] > pw[k]) return false;
    }
    return true;
}

}  // namespace jackpoly
