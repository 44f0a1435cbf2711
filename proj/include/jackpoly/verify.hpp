#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "jackpoly/alpha_fraction.hpp"
#include "jackpoly/composition.hpp"

#include <nlohmann/json.hpp>

namespace jackpoly {

// One verified identity instance. lhs/rhs carry the exact rendered values
// when the check fails.
struct CheckEntry {
    std::string check;
    nlohmann::json params;
    bool pass = false;
    std::string lhs, rhs;
};

class Report {
public:
    Report(std::string suite, nlohmann::json params)
        : suite_(std::move(suite)), params_(std::move(params)) {}

    void add(CheckEntry entry) { entries_.push_back(std::move(entry)); }
    void add_result(std::string check, nlohmann::json params, bool pass, std::string lhs = {},
                    std::string rhs = {});
    void append(const Report& other);

    const std::string& suite() const { return suite_; }
    const nlohmann::json& params() const { return params_; }
    const std::vector<CheckEntry>& entries() const { return entries_; }
    size_t failure_count() const;
    bool all_passed() const { return failure_count() == 0; }

    // JSON list of {check, params, status, lhs, rhs}.
    nlohmann::json to_json() const;
    void write_text(std::ostream& out) const;

private:
    std::string suite_;
    nlohmann::json params_;
    std::vector<CheckEntry> entries_;
};

// Orthogonality with explicit norms: <F_η, F_γ> = δ_{ηγ}·d_η·d'_η over all
// pairs of degree at most degree_cap. The pair sweep runs on `jobs` threads;
// entry order does not depend on the thread count.
Report verify_orthogonality(int n, int degree_cap, int jobs = 1);

// Nonsymmetric Cauchy expansion: Ω = Σ_η F_η(x)·F_η(y)/f_η, degree slice by
// degree slice up to the cap.
Report verify_cauchy(int n, int cap);

// Symmetrization: the orbit sum Σ_{η⁺=λ} F_η/f_η is symmetric and j_λ times
// it reproduces the independently solved symmetric polynomial with leading
// coefficient c_λ.
Report verify_symmetrization(int n, int degree_cap);

// Principal specialization: F_η(1,...,1) = e_η.
Report verify_evaluation(int n, int degree_cap);

// The Φ- and s_i-recursions for d, d', e, plus e_η = e_{η⁺}.
Report verify_recursions(int n, int degree_cap);

// ∏ (1-x_i)^{-r} = Σ_λ k_λ·J_λ/j_λ with k_λ = ∏_s [α(r+a'(s)) - l'(s)].
Report verify_las(int n, int cap, const AlphaFraction& r);

// ξ^x_i Ω = ξ^y_i Ω on the truncated kernel, strictly below the cap.
Report verify_kernel_intertwining(int n, int cap);

// Recursion-built E_η against the triangular eigen-solve.
Report verify_oracle(int n, int degree_cap);

// Eigen-equations ξ_i E_η = η̄_i E_η and strict dominance triangularity.
Report verify_eigen(int n, int degree_cap);

// <J_λ, J_μ>_s = δ_{λμ}·c_λ·c'_λ and J_λ(1,...,1) = b_λ via the g-basis.
Report verify_stanley(int n, int degree_cap);

// J_λ computed in n+1 variables restricted to x_{n+1} = 0 equals J_λ in n.
Report verify_stability(int n, int degree_cap);

}  // namespace jackpoly
