#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "jackpoly/jack.hpp"
#include "jackpoly/pairing.hpp"
#include "jackpoly/verify.hpp"

namespace py = pybind11;
using namespace jackpoly;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    py::module_ json = py::module_::import("json");
    return json.attr("loads")(j.dump());
}

Composition as_composition(const std::vector<int>& parts) {
    Composition eta(parts.begin(), parts.end());
    if (!is_composition(eta)) throw std::invalid_argument("negative part");
    return eta;
}

Report run_suite(const std::string& suite, int n, int degree, const std::string& r, int jobs) {
    if (suite == "orthogonality") return verify_orthogonality(n, degree, jobs);
    if (suite == "cauchy") return verify_cauchy(n, degree);
    if (suite == "symm") return verify_symmetrization(n, degree);
    if (suite == "spec") return verify_evaluation(n, degree);
    if (suite == "recursions") return verify_recursions(n, degree);
    if (suite == "las") return verify_las(n, degree, AlphaFraction::parse(r));
    if (suite == "lemma31") return verify_kernel_intertwining(n, degree);
    if (suite == "oracle") return verify_oracle(n, degree);
    if (suite == "eigen") return verify_eigen(n, degree);
    if (suite == "stanley") return verify_stanley(n, degree);
    if (suite == "stability") return verify_stability(n, degree);
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace

PYBIND11_MODULE(_jackpoly, m) {
    m.doc() = "Exact nonsymmetric Jack polynomials over Q(α)";

    py::class_<AlphaFraction>(m, "Frac")
        .def(py::init([](const std::string& text) { return AlphaFraction::parse(text); }),
             py::arg("text"))
        .def_static("parse", &AlphaFraction::parse)
        .def("__str__", &AlphaFraction::str)
        .def("__repr__", [](const AlphaFraction& f) { return "Frac('" + f.str() + "')"; })
        .def("latex", &AlphaFraction::latex)
        .def("is_zero", &AlphaFraction::is_zero)
        .def("__eq__", [](const AlphaFraction& a, const AlphaFraction& b) { return a == b; })
        .def("__add__", [](const AlphaFraction& a, const AlphaFraction& b) { return a + b; })
        .def("__sub__", [](const AlphaFraction& a, const AlphaFraction& b) { return a - b; })
        .def("__mul__", [](const AlphaFraction& a, const AlphaFraction& b) { return a * b; })
        .def("__truediv__", [](const AlphaFraction& a, const AlphaFraction& b) { return a / b; })
        .def("__neg__", [](const AlphaFraction& a) { return -a; })
        .def("evaluate",
             [](const AlphaFraction& f, const std::string& a) {
                 return to_string(f.evaluate_alpha(parse_rational(a)));
             },
             py::arg("alpha"), "Exact value at a rational α, as a string");

    py::class_<SparsePoly>(m, "Poly")
        .def_property_readonly("n", &SparsePoly::n)
        .def("__str__", [](const SparsePoly& p) { return p.str(); })
        .def("__repr__", [](const SparsePoly& p) { return "Poly('" + p.str() + "')"; })
        .def("latex", [](const SparsePoly& p) { return p.latex(); })
        .def("degree", &SparsePoly::degree)
        .def("is_symmetric", &SparsePoly::is_symmetric)
        .def("coefficient", [](const SparsePoly& p, const std::vector<int>& e) {
            return p.coefficient(ExponentVector(e.begin(), e.end()));
        })
        .def("eval_ones", &SparsePoly::eval_ones)
        .def("terms",
             [](const SparsePoly& p) {
                 std::vector<std::pair<std::vector<int>, AlphaFraction>> out;
                 for (const auto& [e, c] : p.terms()) out.emplace_back(e, c);
                 return out;
             })
        .def("to_json", [](const SparsePoly& p) { return json_to_py(p.to_json()); })
        .def("__eq__", [](const SparsePoly& a, const SparsePoly& b) { return a == b; })
        .def("__add__", [](const SparsePoly& a, const SparsePoly& b) { return a + b; })
        .def("__sub__", [](const SparsePoly& a, const SparsePoly& b) { return a - b; })
        .def("__mul__", [](const SparsePoly& a, const SparsePoly& b) { return a * b; });

    m.def("monic", [](int n, const std::vector<int>& eta) {
        return JackTable(n).monic(as_composition(eta));
    }, py::arg("n"), py::arg("eta"), "Monic nonsymmetric Jack polynomial E_η");
    m.def("integral", [](int n, const std::vector<int>& eta) {
        return JackTable(n).integral(as_composition(eta));
    }, py::arg("n"), py::arg("eta"), "Integral nonsymmetric Jack polynomial F_η");
    m.def("symmetric_integral", [](int n, const std::vector<int>& lam) {
        return JackTable(n).symmetric_integral(as_composition(lam));
    }, py::arg("n"), py::arg("lam"), "Symmetric Jack polynomial J_λ");
    m.def("symmetric_monic", [](int n, const std::vector<int>& lam) {
        return JackTable(n).symmetric_monic(as_composition(lam));
    }, py::arg("n"), py::arg("lam"), "Monic symmetric Jack polynomial P_λ");
    m.def("monomial_symmetric", [](const std::vector<int>& lam) {
        return monomial_symmetric(as_composition(lam));
    }, py::arg("lam"));
    m.def("dual_q", [](int n, const std::vector<int>& gamma) {
        Composition idx = as_composition(gamma);
        return DualBasis::nonsymmetric(n, weight(idx)).dual_polynomial(idx);
    }, py::arg("n"), py::arg("gamma"), "Dual basis polynomial q_γ from the kernel Ω");
    m.def("dual_g", [](int n, const std::vector<int>& lam) {
        Composition idx = as_composition(lam);
        return DualBasis::symmetric(n, weight(idx)).dual_polynomial(idx);
    }, py::arg("n"), py::arg("lam"), "Dual basis polynomial g_λ from the symmetric kernel");

    m.def("constants", [](const std::vector<int>& parts) {
        Composition eta = as_composition(parts);
        CompositionConstants cc = composition_constants(eta);
        py::dict out;
        out["d"] = cc.d.str();
        out["d'"] = cc.dp.str();
        out["e"] = cc.e.str();
        out["f"] = cc.f.str();
        if (is_partition(eta)) {
            PartitionConstants pc = partition_constants(eta);
            out["b"] = pc.b.str();
            out["c"] = pc.c.str();
            out["c'"] = pc.cp.str();
            out["j"] = pc.j.str();
        }
        return out;
    }, py::arg("eta"), "Hook constants of a composition (plus partition extras)");

    m.def("eigenvalues", [](const std::vector<int>& parts) {
        std::vector<std::string> out;
        for (const auto& v : eigenvalue_vector(as_composition(parts))) out.push_back(v.str());
        return out;
    }, py::arg("eta"), "Spectral vector η̄ as rendered fractions");

    m.def("pair", [](const SparsePoly& f, const SparsePoly& g) {
        int cap = std::max({f.degree(), g.degree(), 0});
        return pair_polynomials(f, g, DualBasis::nonsymmetric(f.n(), cap));
    }, py::arg("f"), py::arg("g"), "Combinatorial scalar product <f, g>");
    m.def("pair_symmetric", [](const SparsePoly& f, const SparsePoly& g) {
        int cap = std::max({f.degree(), g.degree(), 0});
        return pair_symmetric(f, g, DualBasis::symmetric(f.n(), cap));
    }, py::arg("f"), py::arg("g"), "Symmetric scalar product <f, g>_s");

    m.def("verify",
          [](const std::string& suite, int n, int degree, const std::string& r, int jobs) {
              Report report = run_suite(suite, n, degree, r, jobs);
              return py::make_tuple(report.all_passed(), json_to_py(report.to_json()));
          },
          py::arg("suite"), py::arg("n"), py::arg("degree"), py::arg("r") = "1",
          py::arg("jobs") = 1,
          "Run an identity suite; returns (all_passed, report_entries)");
}
