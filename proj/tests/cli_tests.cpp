#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "capnash/graph.hpp"
#include "capnash/io.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    json report;
    std::string raw;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CAPNASH_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.raw.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (!res.raw.empty()) res.report = json::parse(res.raw);
    return res;
}

fs::path write_temp(const std::string& name, const std::string& content) {
    fs::path dir = fs::temp_directory_path() / "capnash_cli_tests";
    fs::create_directories(dir);
    fs::path p = dir / name;
    std::ofstream out(p);
    out << content;
    return p;
}

const char* kStarGraph =
    "capgraph 4 3\n"
    "k 0 1\nk 1 1\nk 2 1\nk 3 1\n"
    "e 0 1\ne 0 2\ne 0 3\n";

const char* kPathGraph =
    "capgraph 4 3\n"
    "k 0 1\nk 1 1\nk 2 1\nk 3 1\n"
    "e 0 1\ne 1 2\ne 2 3\n";

const char* kTriangleGraph =
    "capgraph 3 3\n"
    "k 0 2\nk 1 2\nk 2 2\n"
    "e 0 1\ne 0 2\ne 1 2\n";

}  // namespace

TEST_CASE("unique-nash verdicts and exit codes") {
    auto star = write_temp("star.g", kStarGraph);
    RunResult r = run_cli("unique-nash " + star.string());
    CHECK(r.exit_code == 0);
    CHECK(r.report["result"]["unique"] == true);

    auto path = write_temp("path.g", kPathGraph);
    r = run_cli("unique-nash " + path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.report["result"]["unique"] == false);
}

TEST_CASE("enumerate counts the K3 family") {
    auto tri = write_temp("k3.g", kTriangleGraph);
    RunResult r = run_cli("enumerate " + tri.string());
    CHECK(r.exit_code == 0);
    CHECK(r.report["result"]["count"] == 3);
    CHECK(r.report["result"]["complete"] == true);
}

TEST_CASE("is-dset answers both ways") {
    auto tri = write_temp("k3b.g", kTriangleGraph);
    RunResult yes = run_cli("is-dset " + tri.string() + " --set 0");
    CHECK(yes.report["result"]["is_dset"] == true);
    RunResult no = run_cli("is-dset " + tri.string() + " --set 0,1");
    CHECK(no.report["result"]["is_dset"] == false);
}

TEST_CASE("input errors exit 1 and name the line") {
    auto bad = write_temp("bad.g", "capgraph 1 0\nk 0 1\nk 0 1\n");
    RunResult r = run_cli("normalize " + bad.string());
    CHECK(r.exit_code == 1);
    CHECK(r.report["error"]["kind"] == "input");
    std::string detail = r.report["error"]["detail"];
    CHECK(detail.find("line 3") != std::string::npos);
}

TEST_CASE("budget exhaustion exits 2") {
    auto tri = write_temp("k3c.g", kTriangleGraph);
    RunResult r = run_cli("enumerate " + tri.string() + " --budget 2");
    CHECK(r.exit_code == 2);
    CHECK(r.report["error"]["kind"] == "budget-exceeded");
}

TEST_CASE("normalize writes a loadable graph and reports are deterministic") {
    auto path = write_temp("path2.g", kPathGraph);
    RunResult a = run_cli("normalize " + path.string());
    RunResult b = run_cli("normalize " + path.string());
    a.report.erase("timing_ms");
    b.report.erase("timing_ms");
    CHECK(a.report == b.report);
    capnash::CapacitatedGraph gn = capnash::parse_graph_text(a.report["result"]["graph"].get<std::string>());
    CHECK(gn.vertex_count() == 4);
}

TEST_CASE("unique-dset witness re-validates after re-reading the report") {
    auto path = write_temp("path3.g", kPathGraph);
    RunResult r = run_cli("unique-dset " + path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.report["result"]["unique"] == false);
    REQUIRE(r.report["result"].contains("witness_dset"));
    std::vector<int> witness = r.report["result"]["witness_dset"].get<std::vector<int>>();
    capnash::CapacitatedGraph g = capnash::parse_graph_text(kPathGraph);
    CHECK(capnash::is_dset(g, witness));

    // forced methods agree here
    for (const char* m : {"ostar", "mstar", "enumerate"}) {
        RunResult forced = run_cli("unique-dset " + path.string() + " --method " + m);
        CHECK(forced.report["result"]["unique"] == false);
    }
}

TEST_CASE("pruned enumeration that exhausts its budget exits 2 with a partial report") {
    auto cnf = write_temp("timeout.cnf", "p cnf 4 2\n1 -2 4 0\n-1 3 -4 0\n");
    fs::path out = fs::temp_directory_path() / "capnash_cli_tests" / "timeout.g";
    RunResult g = run_cli("gadget --k 2 --cnf " + cnf.string() + " -o " + out.string());
    REQUIRE(g.exit_code == 0);
    RunResult r = run_cli("enumerate " + out.string() + " --pruned --timeout 0.05");
    CHECK(r.exit_code == 2);
    CHECK(r.report["result"]["complete"] == false);
}

TEST_CASE("gadget emits graph plus sidecar and verify-reduction runs the pipeline") {
    auto cnf = write_temp("tiny.cnf", "p cnf 4 2\n1 -2 4 0\n-1 3 -4 0\n");
    fs::path out = fs::temp_directory_path() / "capnash_cli_tests" / "gadget.g";
    RunResult r = run_cli("gadget --k 2 --cnf " + cnf.string() + " -o " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.report["result"]["vertices"] == 59);
    CHECK(fs::exists(out));
    CHECK(fs::exists(out.string() + ".map"));
    capnash::CapacitatedGraph g = capnash::read_graph_file(out.string());
    CHECK(g.vertex_count() == 59);

    RunResult v = run_cli("verify-reduction --k 2 --cnf " + cnf.string() + " --timeout 5");
    CHECK(v.exit_code == 0);
    CHECK(v.report["result"]["satisfiable"] == true);
    CHECK(v.report["result"]["canonical_valid"] == true);
    CHECK(v.report["result"]["witness_valid"] == true);
    CHECK(v.report["result"]["witness_dset_differs"] == true);

    RunResult v3 = run_cli("verify-reduction --k 3 --cnf " + cnf.string() + " --timeout 5");
    CHECK(v3.exit_code == 0);
    CHECK(v3.report["result"]["witness_valid"] == true);
}
