#include "jack_app.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "jackpoly/jack.hpp"
#include "jackpoly/pairing.hpp"
#include "jackpoly/verify.hpp"

namespace jackpoly {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Composition parse_index(const std::string& text, int n) {
    Composition index;
    try {
        index = parse_composition(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (static_cast<int>(index.size()) != n)
        throw UsageError("index " + text + " does not have " + std::to_string(n) + " parts");
    return index;
}

SparsePoly specialized(const SparsePoly& f, const Rational& a) {
    SparsePoly out(f.n());
    for (const auto& [e, c] : f.terms()) out.add_term(e, AlphaFraction(c.evaluate_alpha(a)));
    return out;
}

AlphaFraction specialized(const AlphaFraction& f, const Rational& a) {
    return AlphaFraction(f.evaluate_alpha(a));
}

struct BuildOptions {
    std::string kind;
    int n = 0;
    std::string comp_text, partition_text;
    std::string format = "text";
    std::string alpha_text;
};

int run_build(const BuildOptions& opt, std::ostream& out) {
    const bool wants_partition = opt.kind == "J" || opt.kind == "P" || opt.kind == "m" ||
                                 opt.kind == "g";
    if (wants_partition && opt.partition_text.empty())
        throw UsageError("kind " + opt.kind + " needs --partition");
    if (!wants_partition && opt.comp_text.empty())
        throw UsageError("kind " + opt.kind + " needs --comp");
    if (!opt.comp_text.empty() && !opt.partition_text.empty())
        throw UsageError("pass exactly one of --comp and --partition");

    Composition index =
        parse_index(wants_partition ? opt.partition_text : opt.comp_text, opt.n);
    if (wants_partition && !is_partition(index))
        throw UsageError("kind " + opt.kind + " needs a partition (weakly decreasing parts)");

    SparsePoly poly(opt.n);
    if (opt.kind == "E") {
        poly = JackTable(opt.n).monic(index);
    } else if (opt.kind == "F") {
        poly = JackTable(opt.n).integral(index);
    } else if (opt.kind == "J") {
        poly = JackTable(opt.n).symmetric_integral(index);
    } else if (opt.kind == "P") {
        poly = JackTable(opt.n).symmetric_monic(index);
    } else if (opt.kind == "m") {
        poly = monomial_symmetric(index);
    } else if (opt.kind == "q") {
        poly = DualBasis::nonsymmetric(opt.n, weight(index)).dual_polynomial(index);
    } else if (opt.kind == "g") {
        poly = DualBasis::symmetric(opt.n, weight(index)).dual_polynomial(index);
    } else {
        throw UsageError("unknown kind '" + opt.kind + "' (expected E, F, J, P, m, q, g)");
    }

    if (!opt.alpha_text.empty()) poly = specialized(poly, parse_rational(opt.alpha_text));

    if (opt.format == "text")
        out << poly.str() << "\n";
    else if (opt.format == "latex")
        out << poly.latex() << "\n";
    else if (opt.format == "json")
        out << poly.to_json().dump() << "\n";
    else
        throw UsageError("unknown format '" + opt.format + "'");
    return 0;
}

struct ConstantsOptions {
    int n = 0;
    std::string comp_text;
    std::string format = "text";
    std::string alpha_text;
};

int run_constants(const ConstantsOptions& opt, std::ostream& out) {
    Composition eta = parse_index(opt.comp_text, opt.n);
    CompositionConstants cc = composition_constants(eta);
    std::vector<std::pair<std::string, AlphaFraction>> rows{
        {"d", cc.d}, {"d'", cc.dp}, {"e", cc.e}, {"f", cc.f}};
    if (is_partition(eta)) {
        PartitionConstants pc = partition_constants(eta);
        rows.insert(rows.end(), {{"b", pc.b}, {"c", pc.c}, {"c'", pc.cp}, {"j", pc.j}});
    }
    if (!opt.alpha_text.empty()) {
        Rational a = parse_rational(opt.alpha_text);
        for (auto& [name, value] : rows) value = specialized(value, a);
    }
    if (opt.format == "text") {
        for (const auto& [name, value] : rows) out << name << " = " << value.str() << "\n";
    } else if (opt.format == "json") {
        nlohmann::json obj;
        for (const auto& [name, value] : rows) obj[name] = value.str();
        out << obj.dump() << "\n";
    } else {
        throw UsageError("unknown format '" + opt.format + "'");
    }
    return 0;
}

struct VerifyOptions {
    std::string suite;
    int n = 0;
    int degree = 0;
    int jobs = 1;
    std::string r_text = "1";
    std::string format = "text";
    std::string output;
};

int run_verify(const VerifyOptions& opt, std::ostream& out) {
    std::function<Report()> runner;
    if (opt.suite == "orthogonality")
        runner = [&] { return verify_orthogonality(opt.n, opt.degree, opt.jobs); };
    else if (opt.suite == "cauchy")
        runner = [&] { return verify_cauchy(opt.n, opt.degree); };
    else if (opt.suite == "symm")
        runner = [&] { return verify_symmetrization(opt.n, opt.degree); };
    else if (opt.suite == "spec")
        runner = [&] { return verify_evaluation(opt.n, opt.degree); };
    else if (opt.suite == "recursions")
        runner = [&] { return verify_recursions(opt.n, opt.degree); };
    else if (opt.suite == "las")
        runner = [&] {
            AlphaFraction r;
            try {
                r = AlphaFraction::parse(opt.r_text);
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string("bad --r value: ") + e.what());
            }
            return verify_las(opt.n, opt.degree, r);
        };
    else if (opt.suite == "lemma31")
        runner = [&] { return verify_kernel_intertwining(opt.n, opt.degree); };
    else if (opt.suite == "oracle")
        runner = [&] { return verify_oracle(opt.n, opt.degree); };
    else if (opt.suite == "eigen")
        runner = [&] { return verify_eigen(opt.n, opt.degree); };
    else if (opt.suite == "stanley")
        runner = [&] { return verify_stanley(opt.n, opt.degree); };
    else if (opt.suite == "stability")
        runner = [&] { return verify_stability(opt.n, opt.degree); };
    else
        throw UsageError("unknown suite '" + opt.suite + "'");

    Report report = runner();

    auto write_report = [&](std::ostream& sink) {
        if (opt.format == "json")
            sink << report.to_json().dump() << "\n";
        else if (opt.format == "text")
            report.write_text(sink);
        else
            throw UsageError("unknown format '" + opt.format + "'");
    };
    if (opt.output.empty()) {
        write_report(out);
    } else {
        std::ofstream file(opt.output);
        if (!file) throw std::runtime_error("cannot open output file " + opt.output);
        write_report(file);
        out << "suite " << report.suite() << ": " << report.entries().size() << " checks, "
            << report.failure_count() << " failures\n";
    }
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int run_jack_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact nonsymmetric Jack polynomial calculator and identity checker"};
    app.require_subcommand(1);

    BuildOptions build;
    CLI::App* build_cmd =
        app.add_subcommand("build", "Construct a polynomial (E, F, J, P, m, q, g)");
    build_cmd->add_option("kind", build.kind, "One of E, F, J, P, m, q, g")->required();
    build_cmd->add_option("--n", build.n, "Number of variables")->required();
    build_cmd->add_option("--comp", build.comp_text, "Composition index, e.g. 0,1");
    build_cmd->add_option("--partition", build.partition_text, "Partition index, e.g. 2,0");
    build_cmd->add_option("--format", build.format, "text, json, or latex");
    build_cmd->add_option("--alpha", build.alpha_text, "Specialize α to a rational p/q");

    ConstantsOptions constants;
    CLI::App* constants_cmd =
        app.add_subcommand("constants", "Print the hook constants of a composition");
    constants_cmd->add_option("--n", constants.n, "Number of variables")->required();
    constants_cmd->add_option("--comp", constants.comp_text, "Composition index")->required();
    constants_cmd->add_option("--format", constants.format, "text or json");
    constants_cmd->add_option("--alpha", constants.alpha_text, "Specialize α to a rational p/q");

    VerifyOptions verify;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify",
        "Run an identity suite: orthogonality, cauchy, symm, spec, recursions, las, "
        "lemma31, oracle, eigen, stanley, stability");
    verify_cmd->add_option("suite", verify.suite, "Suite name")->required();
    verify_cmd->add_option("--n", verify.n, "Number of variables")->required();
    verify_cmd->add_option("--degree", verify.degree, "Degree cap of the sweep")->required();
    verify_cmd->add_option("--jobs", verify.jobs, "Worker threads for pair sweeps");
    verify_cmd->add_option("--r", verify.r_text, "Exponent r for the las suite, e.g. 5/2 or 2/α");
    verify_cmd->add_option("--format", verify.format, "text or json");
    verify_cmd->add_option("--output", verify.output, "Write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (build_cmd->parsed()) return run_build(build, out);
        if (constants_cmd->parsed()) return run_constants(constants, out);
        return run_verify(verify, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace jackpoly
