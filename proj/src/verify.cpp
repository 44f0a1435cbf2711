#include "jackpoly/verify.hpp"

#include <functional>
#include <ostream>
#include <thread>

#include "jackpoly/jack.hpp"
#include "jackpoly/operators.hpp"
#include "jackpoly/pairing.hpp"

namespace jackpoly {

void Report::add_result(std::string check, nlohmann::json params, bool pass, std::string lhs,
                        std::string rhs) {
    entries_.push_back({std::move(check), std::move(params), pass, std::move(lhs), std::move(rhs)});
}

void Report::append(const Report& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

size_t Report::failure_count() const {
    size_t fails = 0;
    for (const auto& e : entries_)
        if (!e.pass) ++fails;
    return fails;
}

nlohmann::json Report::to_json() const {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& e : entries_) {
        nlohmann::json item{{"check", e.check}, {"params", e.params},
                            {"status", e.pass ? "pass" : "fail"}};
        if (!e.pass) {
            item["lhs"] = e.lhs;
            item["rhs"] = e.rhs;
        }
        list.push_back(std::move(item));
    }
    return list;
}

void Report::write_text(std::ostream& out) const {
    out << "suite " << suite_ << " " << params_.dump() << ": " << entries_.size() << " checks, "
        << failure_count() << " failures\n";
    for (const auto& e : entries_) {
        if (e.pass) continue;
        out << "  FAIL " << e.check << " " << e.params.dump() << "\n    lhs = " << e.lhs
            << "\n    rhs = " << e.rhs << "\n";
    }
}

namespace {

std::vector<Composition> compositions_up_to(int n, int degree_cap) {
    std::vector<Composition> out;
    for (int d = 0; d <= degree_cap; ++d)
        for (auto& eta : enumerate_compositions(n, d)) out.push_back(std::move(eta));
    return out;
}

std::vector<Composition> partitions_up_to(int n, int degree_cap) {
    std::vector<Composition> out;
    for (int d = 0; d <= degree_cap; ++d)
        for (auto& lambda : enumerate_partitions(n, d)) out.push_back(std::move(lambda));
    return out;
}

// Re-homes an n-variable polynomial into a wider ring at the given offset.
SparsePoly embed_shift(const SparsePoly& f, int total_vars, int offset) {
    SparsePoly out(total_vars);
    ExponentVector e(total_vars, 0);
    for (const auto& [exps, c] : f.terms()) {
        std::fill(e.begin(), e.end(), 0);
        for (int i = 0; i < f.n(); ++i) e[offset + i] = exps[i];
        out.add_term(e, c);
    }
    return out;
}

SparsePoly truncate_total(const SparsePoly& f, int cap) {
    SparsePoly out(f.n());
    for (const auto& [exps, c] : f.terms())
        if (total_degree(exps) <= cap) out.add_term(exps, c);
    return out;
}

void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn) {
    if (jobs <= 1 || count < 2) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const size_t workers = std::min<size_t>(jobs, count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (size_t i = w; i < count; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

Report verify_orthogonality(int n, int degree_cap, int jobs) {
    Report report("orthogonality", {{"n", n}, {"degree", degree_cap}});
    DualBasis basis = DualBasis::nonsymmetric(n, degree_cap);
    JackTable table(n);
    std::vector<Composition> comps = compositions_up_to(n, degree_cap);
    std::vector<SparsePoly> integral;
    std::vector<AlphaFraction> norm;
    integral.reserve(comps.size());
    for (const auto& eta : comps) {
        integral.push_back(table.integral(eta));
        norm.push_back(composition_constants(eta).f);
    }

    // Unordered pairs; symmetry of the pairing is a separate property.
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t a = 0; a < comps.size(); ++a)
        for (size_t b = a; b < comps.size(); ++b) pairs.emplace_back(a, b);
    std::vector<CheckEntry> entries(pairs.size());
    parallel_for(pairs.size(), jobs, [&](size_t k) {
        const auto [a, b] = pairs[k];
        AlphaFraction value = pair_polynomials(integral[a], integral[b], basis);
        AlphaFraction expected = a == b ? norm[a] : AlphaFraction(0);
        entries[k] = {"orthogonality",
                      {{"eta", composition_str(comps[a])}, {"gamma", composition_str(comps[b])}},
                      value == expected,
                      value.str(),
                      expected.str()};
    });
    for (auto& e : entries) report.add(std::move(e));
    return report;
}

Report verify_cauchy(int n, int cap) {
    Report report("cauchy", {{"n", n}, {"degree", cap}});
    TruncatedBiSeries omega = TruncatedBiSeries::omega_kernel(n, cap);
    JackTable table(n);
    SparsePoly sum(2 * n);
    for (const auto& eta : compositions_up_to(n, cap)) {
        SparsePoly f = table.integral(eta);
        sum += embed_shift(f, 2 * n, 0) * embed_shift(f, 2 * n, n) *
               composition_constants(eta).f.inverse();
    }
    for (int d = 0; d <= cap; ++d) {
        SparsePoly lhs = omega.terms().homogeneous_component(2 * d);
        SparsePoly rhs = sum.homogeneous_component(2 * d);
        report.add_result("cauchy", {{"degree", d}}, lhs == rhs, lhs.str(), rhs.str());
    }
    return report;
}

Report verify_symmetrization(int n, int degree_cap) {
    Report report("symmetrization", {{"n", n}, {"degree", degree_cap}});
    JackTable table(n);
    for (const auto& lambda : partitions_up_to(n, degree_cap)) {
        nlohmann::json params{{"lambda", composition_str(lambda)}};
        SparsePoly orbit_sum(n);
        for (const auto& eta : distinct_permutations(lambda))
            orbit_sum += table.integral(eta) * composition_constants(eta).f.inverse();
        report.add_result("symmetrization-sum-symmetric", params, orbit_sum.is_symmetric());

        PartitionConstants pc = partition_constants(lambda);
        SparsePoly lhs = orbit_sum * pc.j;
        SparsePoly oracle = symmetric_integral_oracle(table, lambda);
        report.add_result("symmetrization-identity", params, lhs == oracle, lhs.str(),
                          oracle.str());
        AlphaFraction leading = lhs.coefficient(lambda);
        report.add_result("symmetrization-leading", params, leading == pc.c, leading.str(),
                          pc.c.str());
    }
    return report;
}

Report verify_evaluation(int n, int degree_cap) {
    Report report("evaluation", {{"n", n}, {"degree", degree_cap}});
    JackTable table(n);
    for (const auto& eta : compositions_up_to(n, degree_cap)) {
        AlphaFraction value = table.integral(eta).eval_ones();
        AlphaFraction expected = composition_constants(eta).e;
        report.add_result("evaluation", {{"eta", composition_str(eta)}}, value == expected,
                          value.str(), expected.str());
    }
    return report;
}

Report verify_recursions(int n, int degree_cap) {
    Report report("recursions", {{"n", n}, {"degree", degree_cap}});
    const AlphaFraction alpha = AlphaFraction::alpha();
    for (const auto& eta : compositions_up_to(n, degree_cap)) {
        nlohmann::json params{{"eta", composition_str(eta)}};
        CompositionConstants base = composition_constants(eta);
        std::vector<AlphaFraction> ebar = eigenvalue_vector(eta);

        CompositionConstants raised = composition_constants(phi_index(eta));
        AlphaFraction ratio = ebar[0] + alpha + AlphaFraction(n);
        report.add_result("phi-recursion-d", params, raised.d == base.d * ratio, raised.d.str(),
                          (base.d * ratio).str());
        report.add_result("phi-recursion-e", params, raised.e == base.e * ratio, raised.e.str(),
                          (base.e * ratio).str());

        for (int i = 0; i + 1 < n; ++i) {
            Composition swapped = eta;
            std::swap(swapped[i], swapped[i + 1]);
            CompositionConstants other = composition_constants(swapped);
            nlohmann::json swap_params{{"eta", composition_str(eta)}, {"i", i + 1}};
            report.add_result("swap-invariance-e", swap_params, other.e == base.e, other.e.str(),
                              base.e.str());
            if (eta[i] > eta[i + 1]) {
                AlphaFraction d = ebar[i] - ebar[i + 1];
                report.add_result("swap-recursion-d", swap_params,
                                  other.d * d == base.d * (d + AlphaFraction(1)),
                                  (other.d / base.d).str(),
                                  ((d + AlphaFraction(1)) / d).str());
                report.add_result("swap-recursion-dp", swap_params,
                                  other.dp * (d - AlphaFraction(1)) == base.dp * d,
                                  (other.dp / base.dp).str(),
                                  (d / (d - AlphaFraction(1))).str());
            }
        }

        AlphaFraction sorted_e = composition_constants(sort_to_partition(eta).partition).e;
        report.add_result("e-sorted", params, base.e == sorted_e, base.e.str(), sorted_e.str());
    }
    return report;
}

Report verify_las(int n, int cap, const AlphaFraction& r) {
    Report report("las", {{"n", n}, {"degree", cap}, {"r", r.str()}});
    const AlphaFraction alpha = AlphaFraction::alpha();

    SparsePoly lhs = SparsePoly::one(n);
    for (int i = 0; i < n; ++i) {
        SparsePoly factor(n);
        for (int k = 0; k <= cap; ++k) {
            ExponentVector e(n, 0);
            e[i] = k;
            factor.add_term(e, rising_factorial_coefficient(r, k));
        }
        lhs = truncate_total(lhs * factor, cap);
    }

    JackTable table(n);
    SparsePoly rhs(n);
    for (const auto& lambda : partitions_up_to(n, cap)) {
        AlphaFraction k_lambda(1);
        for (size_t i = 1; i <= lambda.size(); ++i) {
            for (int j = 1; j <= lambda[i - 1]; ++j) {
                CellStats s = cell_stats(lambda, static_cast<int>(i), j);
                k_lambda *= alpha * (r + AlphaFraction(s.coarm)) - AlphaFraction(s.coleg());
            }
        }
        rhs += table.symmetric_integral(lambda) *
               (k_lambda / partition_constants(lambda).j);
    }

    for (int d = 0; d <= cap; ++d) {
        SparsePoly l = lhs.homogeneous_component(d);
        SparsePoly rr = rhs.homogeneous_component(d);
        report.add_result("las", {{"degree", d}, {"r", r.str()}}, l == rr, l.str(), rr.str());
    }
    return report;
}

Report verify_kernel_intertwining(int n, int cap) {
    Report report("lemma31", {{"n", n}, {"degree", cap}});
    TruncatedBiSeries omega = TruncatedBiSeries::omega_kernel(n, cap);
    for (int i = 0; i < n; ++i) {
        SparsePoly diff = cherednik_block(omega.terms(), i, 0, n) -
                          cherednik_block(omega.terms(), i, n, n);
        // The cap slice is incomplete; agreement is asserted strictly below it.
        SparsePoly below(2 * n);
        for (const auto& [exps, c] : diff.terms()) {
            int xdeg = 0;
            for (int v = 0; v < n; ++v) xdeg += exps[v];
            if (xdeg < cap) below.add_term(exps, c);
        }
        report.add_result("lemma31", {{"i", i + 1}}, below.is_zero(), below.str(), "0");
    }
    return report;
}

Report verify_oracle(int n, int degree_cap) {
    Report report("oracle", {{"n", n}, {"degree", degree_cap}});
    JackTable table(n);
    for (const auto& eta : compositions_up_to(n, degree_cap)) {
        const SparsePoly& recursive = table.monic(eta);
        SparsePoly solved = build_monic_oracle(eta);
        report.add_result("oracle", {{"eta", composition_str(eta)}}, recursive == solved,
                          recursive.str(), solved.str());
    }
    return report;
}

Report verify_eigen(int n, int degree_cap) {
    Report report("eigen", {{"n", n}, {"degree", degree_cap}});
    JackTable table(n);
    for (const auto& eta : compositions_up_to(n, degree_cap)) {
        nlohmann::json params{{"eta", composition_str(eta)}};
        const SparsePoly& e_poly = table.monic(eta);
        std::vector<AlphaFraction> ebar = eigenvalue_vector(eta);
        bool eigen_ok = true;
        std::string lhs, rhs;
        for (int i = 0; i < n && eigen_ok; ++i) {
            SparsePoly applied = cherednik(e_poly, i);
            SparsePoly scaled = e_poly * ebar[i];
            if (applied != scaled) {
                eigen_ok = false;
                lhs = applied.str();
                rhs = scaled.str();
            }
        }
        report.add_result("eigen-equations", params, eigen_ok, lhs, rhs);

        bool triangular = e_poly.coefficient(eta).is_one();
        for (const auto& [exps, c] : e_poly.terms()) {
            if (exps == eta) continue;
            if (dominance_compare(exps, eta) != DominanceRelation::Less) {
                triangular = false;
                break;
            }
        }
        report.add_result("triangularity", params, triangular, e_poly.str(),
                          "x^eta + strictly lower terms");
    }
    return report;
}

Report verify_stanley(int n, int degree_cap) {
    Report report("stanley", {{"n", n}, {"degree", degree_cap}});
    DualBasis basis = DualBasis::symmetric(n, degree_cap);
    JackTable table(n);
    std::vector<Composition> parts = partitions_up_to(n, degree_cap);
    std::vector<SparsePoly> jpoly;
    jpoly.reserve(parts.size());
    for (const auto& lambda : parts) jpoly.push_back(table.symmetric_integral(lambda));

    for (size_t a = 0; a < parts.size(); ++a) {
        for (size_t b = 0; b < parts.size(); ++b) {
            AlphaFraction value = pair_symmetric(jpoly[a], jpoly[b], basis);
            AlphaFraction expected =
                a == b ? partition_constants(parts[a]).j : AlphaFraction(0);
            report.add_result(
                "stanley-norm",
                {{"lambda", composition_str(parts[a])}, {"mu", composition_str(parts[b])}},
                value == expected, value.str(), expected.str());
        }
        AlphaFraction value = jpoly[a].eval_ones();
        AlphaFraction expected = partition_constants(parts[a]).b;
        report.add_result("stanley-evaluation", {{"lambda", composition_str(parts[a])}},
                          value == expected, value.str(), expected.str());
    }
    return report;
}

Report verify_stability(int n, int degree_cap) {
    Report report("stability", {{"n", n}, {"degree", degree_cap}});
    JackTable small(n), big(n + 1);
    for (const auto& lambda : partitions_up_to(n, degree_cap)) {
        Composition padded = lambda;
        padded.push_back(0);
        SparsePoly restricted = big.symmetric_integral(padded).set_var_zero(n).drop_last_var();
        SparsePoly direct = small.symmetric_integral(lambda);
        report.add_result("stability", {{"lambda", composition_str(lambda)}},
                          restricted == direct, restricted.str(), direct.str());
    }
    return report;
}

}  // namespace jackpoly
