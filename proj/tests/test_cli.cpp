#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "hpoly/closed_forms.hpp"
#include "hpoly/json_io.hpp"
#include "helpers.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + std::string(HPOLY_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string fixture_path(const std::string& name) {
    return std::string(HPOLY_FIXTURES_DIR) + "/" + name;
}

std::string first_line(const std::string& text) {
    return text.substr(0, text.find('\n'));
}

}  // namespace

TEST_CASE("chromatic subcommand") {
    const auto r = run_cli("chromatic --graph " + fixture_path("t1.g6"));
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "k^6 - 5k^5 + 10k^4 - 10k^3 + 5k^2 - k");
    // default table runs k = 1..6
    CHECK(r.out.find("3\t96\n") != std::string::npos);
}

TEST_CASE("hpoly subcommand prints the pairs polynomial of the path fixture") {
    const auto r = run_cli("hpoly --graph " + fixture_path("t1.g6") + " --pattern P2");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "3k^7 - 23k^6 + 72k^5 - 118k^4 + 107k^3 - 51k^2 + 10k");
}

TEST_CASE("pairs equals hpoly with pattern P2") {
    const auto a = run_cli("pairs --graph " + fixture_path("t2.el"));
    const auto b = run_cli("hpoly --graph " + fixture_path("t2.el") + " --pattern P2");
    CHECK(a.exit_code == 0);
    CHECK(first_line(a.out) == first_line(b.out));
}

TEST_CASE("distinguish reports the first separating k") {
    const auto r = run_cli("distinguish --a " + fixture_path("g1.el") + " --b " +
                           fixture_path("g2.el") + " --patterns N1,P2,C4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("N1: equal\n") != std::string::npos);
    CHECK(r.out.find("P2: equal\n") != std::string::npos);
    CHECK(r.out.find("C4: differ at k=5 (24540 vs 24360)\n") != std::string::npos);
}

TEST_CASE("oracle subcommand with dot export") {
    const std::string p3 = "/tmp/hpoly_test_p3.el";
    {
        std::ofstream out(p3);
        out << "3 2\n0 1\n1 2\n";
    }
    const std::string dot = "/tmp/hpoly_test_p3.dot";
    const auto r = run_cli("oracle --graph " + p3 + " --k 3 --export-dot " + dot);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("vertices\t12") != std::string::npos);
    CHECK(r.out.find("edges\t15") != std::string::npos);
    CHECK(r.out.find("squares\t3") != std::string::npos);
    const std::string dot_text = testhelp::read_file(dot);
    int label_count = 0;
    for (std::size_t pos = 0; (pos = dot_text.find("label=", pos)) != std::string::npos; ++pos)
        ++label_count;
    CHECK(label_count == 12);
    std::remove(p3.c_str());
    std::remove(dot.c_str());
}

TEST_CASE("json output round-trips through the poly reader") {
    const auto r = run_cli("pairs --graph " + fixture_path("r1.el") + " --json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const hpoly::Poly p = hpoly::poly_from_json(j["coefficients"]);
    CHECK(p == hpoly::pairs_general(testhelp::fixture("r1")));
    CHECK(j["text"] == p.to_string());
}

TEST_CASE("dump generators") {
    const auto r = run_cli("hpoly --graph " + fixture_path("t1.el") +
                           " --pattern P2 --dump-generators --json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.contains("generators"));
    CHECK(j["generators"].size() == 6);  // one per vertex
    CHECK(j["generators"][0]["kappa"] == 2);
}

TEST_CASE("hypercube table") {
    const auto r = run_cli("hypercube --graph " + fixture_path("g1.el") +
                           " --s 5 --k 5");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "yes");
    const auto r2 = run_cli("hypercube --graph " + fixture_path("g1.el") + " --s 4 --k 4");
    CHECK(first_line(r2.out) == "no");
}

TEST_CASE("invariants report") {
    const auto r = run_cli("invariants --graph " + fixture_path("r2.el") + " --json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["vertices"] == 6);
    CHECK(j["edges"] == 6);
    CHECK(j["components"] == 1);
    CHECK(j["component_count_from_pairs"] == 1);
    CHECK(j["pseudotree_slope_at_2"] == "-1");
    CHECK(j["alternating"] == true);
}

TEST_CASE("exit codes") {
    SECTION("usage errors exit 64") {
        CHECK(run_cli("").exit_code == 64);
        CHECK(run_cli("no-such-command").exit_code == 64);
        CHECK(run_cli("pairs").exit_code == 64);  // missing --graph
    }
    SECTION("domain errors exit 1") {
        CHECK(run_cli("pairs --graph /nonexistent/file").exit_code == 1);
        const std::string bad = "/tmp/hpoly_test_bad.el";
        {
            std::ofstream out(bad);
            out << "2 1\n0 0\n";
        }
        CHECK(run_cli("pairs --graph " + bad).exit_code == 1);
        std::remove(bad.c_str());
    }
    SECTION("budget errors exit 2") {
        CHECK(run_cli("oracle --graph " + fixture_path("g1.el") + " --k 4 --budget-colorings 10")
                  .exit_code == 2);
        CHECK(run_cli("hpoly --graph " + fixture_path("g1.el") +
                      " --pattern C6 --budget-nodes 100")
                  .exit_code == 2);
    }
    SECTION("help exits 0") { CHECK(run_cli("--help").exit_code == 0); }
}

TEST_CASE("output is byte-identical across runs and thread settings") {
    const std::string cmd = "c4 --graph " + fixture_path("g1.el");
    const auto a = run_cli(cmd, "HPOLY_THREADS=1");
    const auto b = run_cli(cmd, "HPOLY_THREADS=4");
    const auto c = run_cli(cmd, "HPOLY_THREADS=4");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(b.out == c.out);
}
