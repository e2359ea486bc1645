#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "thickset/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

using namespace thickset::cli;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out, err;
    json report;
};

RunResult run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"thickset"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    RunResult r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    if (!r.out.empty() && r.out[0] == '{') r.report = json::parse(r.out);
    return r;
}

}  // namespace

TEST_CASE("exit codes follow the verdict") {
    CHECK(run({"thick", "--set", "2Z"}).code == 0);
    CHECK(run({"thick", "--set", "1+2Z | -1+2Z"}).code == 1);
    CHECK(run({"rotation", "--alpha", "sqrt2", "--t", "1/3", "--member", "1"}).code == 1);
    CHECK(run({"rotation", "--alpha", "sqrt2", "--t", "1/3", "--member", "2"}).code == 0);
    CHECK(run({"nonsense"}).code == 64);
    CHECK(run({"thick"}).code == 64);                       // missing --set
    CHECK(run({"thick", "--set", "2Z @"}).code == 64);      // parse error
    CHECK(run({"rotation", "--alpha", "sqrt4", "--t", "1/3", "--member", "1"}).code == 64);
}

TEST_CASE("report envelope carries the schema fields") {
    RunResult r = run({"thick", "--set", "2Z"});
    REQUIRE(!r.report.is_null());
    CHECK(r.report.at("command") == "thick");
    CHECK(r.report.at("verdict") == "thick");
    CHECK(r.report.at("version") == kVersion);
    CHECK(r.report.contains("seed"));
    CHECK(r.report.at("cert").at("type") == "thickness");
    CHECK(r.report.at("cert").at("payload").at("minimal") == 3);
    // Exact values are strings, never floating point.
    CHECK(r.report.at("cert").at("payload").at("T").is_string());
}

TEST_CASE("sweep emits CSV with header-only empty ranges") {
    RunResult rows = run({"sweep", "--kind", "bohr_membership", "--alpha", "sqrt2", "--t", "1/3",
                          "--from", "-5", "--to", "5"});
    CHECK(rows.code == 0);
    size_t lines = 0;
    for (char c : rows.out)
        if (c == '\n') ++lines;
    CHECK(lines == 12);  // header + 11 rows
    CHECK(rows.out.rfind("n,position_exact,position_approx,member\n", 0) == 0);

    RunResult empty = run({"sweep", "--kind", "bohr_membership", "--from", "1", "--to", "0"});
    CHECK(empty.out == "n,position_exact,position_approx,member\n");
}

TEST_CASE("certificates replay through check_cert") {
    for (auto args : std::vector<std::vector<const char*>>{
             {"thick", "--set", "2Z"},
             {"thick", "--set", "1+2Z"},
             {"generic", "--set", "2Z & (0, inf)"},
             {"parse", "--set", "4Z | 2+4Z"},
             {"rotation", "--t", "1/3", "--thickness"},
             {"rotation", "--t", "1/3", "--witness-table", "5"},
             {"vdw", "--n", "1", "--variant", "1", "--cover"},
             {"heis", "--power", "4"},
             {"heis", "--root", "4,0,0", "--n", "2"}}) {
        std::vector<const char*> argv{"thickset"};
        argv.insert(argv.end(), args.begin(), args.end());
        std::ostringstream out, err;
        run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        REQUIRE(!out.str().empty());
        json report = json::parse(out.str());
        CHECK(check_cert(report));
    }
}

TEST_CASE("tampered certificates fail the replay") {
    RunResult r = run({"thick", "--set", "2Z"});
    json bad = r.report;
    bad["cert"]["payload"]["independent_witness"] = json::array({"0", "2"});  // conflicting pair
    CHECK(!check_cert(bad));
    json unknown = r.report;
    unknown["cert"]["type"] = "mystery";
    CHECK(!check_cert(unknown));
}

TEST_CASE("check-cert mode round trips through a file") {
    RunResult r = run({"vdw", "--n", "1", "--variant", "2", "--cover"});
    REQUIRE(r.code == 0);
    std::string path = "check_cert_roundtrip.json";
    {
        std::ofstream f(path);
        f << r.out;
    }
    CHECK(run({"--check-cert", path.c_str()}).code == 0);
    std::remove(path.c_str());
}

TEST_CASE("config file controls bounds and seed") {
    std::string path = "cli_test_config.txt";
    {
        std::ofstream f(path);
        f << "# comment\nwindow = 100\nwitness_bound = 5000\ndfs_cap = 32\nseed = 99\n";
    }
    RunResult r = run({"--config", path.c_str(), "thick", "--set", "2Z"});
    CHECK(r.report.at("seed") == 99);
    Config cfg = Config::from_file(path);
    CHECK(cfg.window == 100);
    CHECK(cfg.witness_bound == 5000);
    CHECK(cfg.dfs_cap == 32);
    std::remove(path.c_str());
    {
        std::ofstream f(path);
        f << "bogus = 1\n";
    }
    CHECK_THROWS_AS(Config::from_file(path), std::invalid_argument);
    std::remove(path.c_str());
}

TEST_CASE("reports are deterministic byte for byte") {
    for (auto args : std::vector<std::vector<const char*>>{
             {"thick", "--set", "1+6Z | 5+6Z | 3+6Z & [0, 40)"},
             {"generic", "--set", "2Z & (0, inf)"},
             {"vdw", "--n", "2", "--variant", "2", "--cover"},
             {"vdw", "--n", "1", "--variant", "1", "--qseq", "15"}}) {
        std::vector<const char*> argv{"thickset"};
        argv.insert(argv.end(), args.begin(), args.end());
        std::ostringstream o1, o2, e;
        run_cli(static_cast<int>(argv.size()), argv.data(), o1, e);
        run_cli(static_cast<int>(argv.size()), argv.data(), o2, e);
        CHECK(o1.str() == o2.str());
    }
}

TEST_CASE("text format prints a compact summary") {
    RunResult r = run({"thick", "--set", "2Z", "--format", "text"});
    CHECK(r.out == "verdict: thick\ncert: thickness\n");
}
