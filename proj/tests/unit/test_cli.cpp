#include <doctest.h>

#include <sstream>
#include <vector>

#include "jack_app.hpp"
#include "jackpoly/sparse_poly.hpp"

#include <nlohmann/json.hpp>

using namespace jackpoly;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run(std::vector<std::string> args) {
    args.insert(args.begin(), "jack");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_jack_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("build command renders polynomials") {
    CliResult r = run({"build", "F", "--n", "2", "--comp", "0,1", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out == "(α+2)·x2\n");

    r = run({"build", "E", "--n", "2", "--comp", "0,0"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");

    r = run({"build", "J", "--n", "2", "--partition", "1,0", "--format", "latex"});
    CHECK(r.code == 0);
    CHECK(r.out == "x_{1}+x_{2}\n");
}

TEST_CASE("build errors") {
    CHECK(run({"build", "J", "--n", "2", "--comp", "1,0"}).code == 2);        // wrong index flag
    CHECK(run({"build", "J", "--n", "2", "--partition", "0,1"}).code == 2);   // not a partition
    CHECK(run({"build", "E", "--n", "2", "--comp", "0,1,2"}).code == 2);      // wrong length
    CHECK(run({"build", "E", "--n", "2", "--comp", "x"}).code == 2);          // malformed
    CHECK(run({"build", "Z", "--n", "2", "--comp", "0,1"}).code == 2);        // unknown kind
    CHECK(run({"nonsense"}).code == 2);
}

TEST_CASE("build JSON output round-trips") {
    CliResult r = run({"build", "F", "--n", "2", "--comp", "1,0", "--format", "json"});
    CHECK(r.code == 0);
    SparsePoly parsed = SparsePoly::from_json(nlohmann::json::parse(r.out));
    CliResult again = run({"build", "F", "--n", "2", "--comp", "1,0", "--format", "json"});
    CHECK(SparsePoly::from_json(nlohmann::json::parse(again.out)) == parsed);
    CHECK(parsed.coefficient({0, 1}).is_one());
}

TEST_CASE("alpha specialization") {
    CliResult r = run({"build", "F", "--n", "2", "--comp", "0,1", "--alpha", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "4·x2\n");

    // E_(1,0) = x1 + x2/(α+1) has a pole at α = -1.
    r = run({"build", "E", "--n", "2", "--comp", "1,0", "--alpha", "-1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("pole") != std::string::npos);
}

TEST_CASE("constants command") {
    CliResult r = run({"constants", "--n", "2", "--comp", "0,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "d = α+2\nd' = α+1\ne = α+2\nf = α^2+3α+2\n");

    r = run({"constants", "--n", "2", "--comp", "1,0", "--format", "json"});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["d"] == "α+1");
    CHECK(j["d'"] == "α");
    CHECK(j["e"] == "α+2");
    CHECK(j["b"] == "2");
    CHECK(j["c"] == "1");
    CHECK(j["c'"] == "α");
    CHECK(j["j"] == "α");

    r = run({"constants", "--n", "2", "--comp", "0,0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("d = 1") != std::string::npos);
    CHECK(r.out.find("j = 1") != std::string::npos);
}

TEST_CASE("verify command exit codes and formats") {
    CliResult r = run({"verify", "orthogonality", "--n", "2", "--degree", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0 failures") != std::string::npos);

    r = run({"verify", "las", "--n", "2", "--degree", "2", "--r", "1"});
    CHECK(r.code == 0);

    r = run({"verify", "las", "--n", "1", "--degree", "3", "--r", "5/2"});
    CHECK(r.code == 0);

    r = run({"verify", "recursions", "--n", "2", "--degree", "3", "--format", "json"});
    CHECK(r.code == 0);
    nlohmann::json report = nlohmann::json::parse(r.out);
    CHECK(report.is_array());
    for (const auto& entry : report) CHECK(entry["status"] == "pass");

    CHECK(run({"verify", "bogus", "--n", "2", "--degree", "2"}).code == 2);
    CHECK(run({"verify", "orthogonality", "--n", "2"}).code == 2);  // missing degree
}

TEST_CASE("verify output is independent of the thread count") {
    CliResult serial =
        run({"verify", "orthogonality", "--n", "2", "--degree", "3", "--format", "json"});
    CliResult parallel = run({"verify", "orthogonality", "--n", "2", "--degree", "3", "--jobs",
                              "4", "--format", "json"});
    CHECK(serial.code == 0);
    CHECK(serial.out == parallel.out);
}

TEST_CASE("help exits cleanly") {
    CHECK(run({"--help"}).code == 0);
}
