// Integration tests that drive the installed binary through a shell, checking
// exit codes and both output streams. The binary path comes in through the
// FERRERS_CLI_PATH compile definition.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>
#include <unistd.h>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// `prefix` goes in front of the binary path (environment assignments).
RunResult run_with_prefix(const std::string& prefix, const std::string& args) {
    static int counter = 0;
    std::string tag = std::to_string(getpid()) + "_" + std::to_string(counter++);
    std::string out_path = "cli_out_" + tag;
    std::string err_path = "cli_err_" + tag;

    std::string command = prefix + std::string(FERRERS_CLI_PATH) + " " + args + " >" + out_path +
                          " 2>" + err_path;
    int status = std::system(command.c_str());
    RunResult result{WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out_path),
                     slurp(err_path)};
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

RunResult run(const std::string& args) { return run_with_prefix("", args); }

}  // namespace

TEST_CASE("count") {
    RunResult r = run("count 4,3,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "23\n");
    CHECK(r.err.empty());

    for (const char* method : {"decompose", "oracle", "alternative", "auto"}) {
        r = run(std::string("count 4,3,1 --method ") + method);
        CHECK(r.exit_code == 0);
        CHECK(r.out == "23\n");
    }

    CHECK(run("count 12,10,8,7,5,3,1").out == "14985\n");
    CHECK(run("count \"\"").out == "1\n");
    CHECK(run("count 1,3,4").out == "23\n");  // ascending input is reversed
    CHECK(run("count 7,7,2,2").out == "155\n");
}

TEST_CASE("count rejects bad input") {
    RunResult r = run("count 3,-1");
    CHECK(r.exit_code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("NegativeEntry") != std::string::npos);

    r = run("count 1,2,1");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("NonMonotoneInput") != std::string::npos);

    r = run("count abc");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("BadNumber") != std::string::npos);

    CHECK(run("count 4,3,1 --method bogus").exit_code == 2);
    CHECK(run("count").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("").exit_code == 2);
}

TEST_CASE("poly") {
    CHECK(run("poly 5,4,2,1").out == "C5 + C4 + C3*C2\n");
    CHECK(run("poly 4,3,1").out == "C4 + C3 + C2*C2\n");
    CHECK(run("poly 5,5,2,2").out == "C5 + C4 + C3*C2 + 2*C3 + 2*C2 + 1\n");
    CHECK(run("poly \"\"").out == "1\n");

    RunResult r = run("poly 5,5,2,2 --format json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 6);
    CHECK(j[0] == nlohmann::json({{"coeff", 1}, {"monomial", {5}}}));
    CHECK(j[5] == nlohmann::json({{"coeff", 1}, {"monomial", nlohmann::json::array()}}));
}

TEST_CASE("poly --alternative") {
    CHECK(run("poly 2,2,1 --alternative").out == "C4 - (C3)\n");
    CHECK(run("poly 3,1,1 --alternative").out == "C4 - (C2*C2)\n");
    CHECK(run("poly 2,1 --alternative").out == "C3\n");

    RunResult r = run("poly 2,2,1 --alternative --format json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["staircase"] == 4);
    CHECK(j["subtracted"] == nlohmann::json({{{"coeff", 1}, {"monomial", {3}}}}));
}

TEST_CASE("christoffel") {
    RunResult r = run("christoffel 4 6");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["diagram"] == nlohmann::json({4, 3, 1}));
    CHECK(j["word"] == "0101101011");
    CHECK(j["cells"] == "8");

    j = nlohmann::json::parse(run("christoffel 1 5").out);
    CHECK(j["diagram"] == nlohmann::json::array());
    CHECK(j["word"] == "011111");
    CHECK(j["cells"] == "0");

    CHECK(run("christoffel 0 5").exit_code == 2);
    CHECK(run("christoffel 4").exit_code == 2);
}

TEST_CASE("formula") {
    CHECK(run("formula catalan 5").out == "42\n");
    CHECK(run("formula fuss 3 2").out == "12\n");
    CHECK(run("formula general 3 5").out == "7\n");
    CHECK(run("formula prime 3 6").out == "12\n");
    CHECK(run("formula ballot 1 2 1").out == "3\n");
    CHECK(run("formula ballot 2 5 2").out == "42/5\n");
    CHECK(run("formula avoidline 2 1").out == "70\n");
    CHECK(run("formula bizley 8 14").out == "14985\n");

    RunResult r = run("formula general 4 6");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("NotCoprime") != std::string::npos);

    r = run("formula prime 4 6");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("NotPrime") != std::string::npos);

    CHECK(run("formula catalan").exit_code == 2);
    CHECK(run("formula catalan 1 2").exit_code == 2);
    CHECK(run("formula nosuch 1").exit_code == 2);
}

TEST_CASE("tree") {
    RunResult r = run("tree 2 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "digraph kreweras {\n"
          "  n0 [label=\"[]\"];\n"
          "  n1 [label=\"[1]\"];\n"
          "  n1 -> n0;\n"
          "}\n");

    r = run("tree 4 6 --out json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["nodes"].size() == 23);
    CHECK(j["edges"].size() == 39);

    r = run("tree 4 6 --branch 2,2,1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("branch_size=9\n", 0) == 0);
    CHECK(r.out.find(", color=red") != std::string::npos);

    r = run("tree 4 6 --branch 9,9");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("NotANode") != std::string::npos);
}

TEST_CASE("tree respects FERRERS_NODE_CAP") {
    RunResult r = run_with_prefix("FERRERS_NODE_CAP=5 ", "tree 4 6");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("CapExceeded") != std::string::npos);

    CHECK(run_with_prefix("FERRERS_NODE_CAP=23 ", "tree 4 6").exit_code == 0);

    r = run_with_prefix("FERRERS_NODE_CAP=bogus ", "tree 4 6");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("FERRERS_NODE_CAP") != std::string::npos);
}

TEST_CASE("verify") {
    RunResult r = run("verify --max-cells 10 --max-lattice 3");
    CHECK(r.exit_code == 0);
    int pass_lines = 0;
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line))
        if (line.rfind("PASS ", 0) == 0) ++pass_lines;
    CHECK(pass_lines == 13);  // 12 suites and the summary
    CHECK(r.out.find("FAIL") == std::string::npos);

    r = run("verify --max-cells 10 --max-lattice 3 --inject-fault");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("FAIL decompose-vs-oracle") != std::string::npos);
    CHECK(r.out.find("[2,1]") != std::string::npos);
}

TEST_CASE("bench") {
    RunResult r = run("bench 4,3,1 -r 2");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["diagram"] == "[4,3,1]");
    CHECK(j["repetitions"] == 2);
    CHECK(j["decompose_memoized"]["value"] == "23");
    CHECK(j["decompose_unmemoized"]["value"] == "23");
    CHECK(j["oracle_dp"]["value"] == "23");
    CHECK(j["decompose_memoized"]["splits"].get<std::int64_t>() >= 1);
    CHECK(j["decompose_unmemoized"]["splits"].get<std::int64_t>() >=
          j["decompose_memoized"]["splits"].get<std::int64_t>());
    CHECK(j["oracle_dp"]["total_ns"].get<std::int64_t>() >= 0);

    j = nlohmann::json::parse(run("bench \"\" -r 1").out);
    CHECK(j["decompose_memoized"]["value"] == "1");
    CHECK(j["decompose_memoized"]["splits"] == 0);
    CHECK(j["oracle_dp"]["value"] == "1");

    CHECK(run("bench 4,3,1 -r 0").exit_code == 2);
}
