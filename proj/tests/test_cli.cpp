#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>

#include "risnet/spectral.hpp"

// RISNET_CLI_PATH is injected by the build: the freshly built binary.

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path work_dir() {
    fs::path dir = fs::temp_directory_path() / "risnet_cli_tests";
    fs::create_directories(dir);
    return dir;
}

int run_cli(const std::string& args) {
    std::string cmd =
        std::string(RISNET_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path write_file(const std::string& name, const std::string& body) {
    fs::path p = work_dir() / name;
    std::ofstream f(p);
    f << body;
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::stringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

// Small arena with a permissive reflected-link threshold so candidate
// sets are non-empty and solves stay fast.
const char* kConfig =
    R"({"num_ue": 4, "num_uav": 4, "gamma0_ris": -100000, "seed": 3})";

std::string cfg_path() {
    static std::string p = write_file("cli_cfg.json", kConfig).string();
    return p;
}

} // namespace

TEST_CASE("cli: help and argument errors") {
    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("solve --help") == 0);
    CHECK(run_cli("") == 2);                      // a subcommand is required
    CHECK(run_cli("frobnicate") == 2);            // unknown subcommand
    CHECK(run_cli("solve --scheme bogus") == 2);  // not in the member list
    CHECK(run_cli("solve --phase-mode x") == 2);
}

TEST_CASE("cli: config errors") {
    CHECK(run_cli("simulate --config /nonexistent/cfg.json") == 2);
    fs::path bad = write_file("bad.json", "{ not json");
    CHECK(run_cli("simulate --config " + bad.string()) == 2);
    fs::path unknown = write_file("unknown.json", R"({"num_eu": 3})");
    CHECK(run_cli("simulate --config " + unknown.string()) == 2);
}

TEST_CASE("cli: simulate emits a JSON report") {
    fs::path out = work_dir() / "sim.json";
    int rc = run_cli("simulate --config " + cfg_path() +
                     " --phase-mode cophase --out " + out.string());
    REQUIRE(rc == 0);
    json j = json::parse(slurp(out));
    CHECK(j["seed"] == 3);
    CHECK(j["num_nodes"] == 8);
    CHECK(j["num_candidates"].get<int>() > 0);
    CHECK(j["noop"] == false);
    // default scheme set for a multi-UE scenario
    for (const char* name :
         {"original", "random", "sdp-relaxation", "exhaustive"})
        CHECK(j["lambda2"].contains(name));
    CHECK(j["lambda2"]["exhaustive"].get<double>() >=
          j["lambda2"]["original"].get<double>() - 1e-12);
}

TEST_CASE("cli: solve reports the documented fields") {
    fs::path out = work_dir() / "solve.json";

    SUBCASE("exhaustive") {
        REQUIRE(run_cli("solve --scheme exhaustive --config " + cfg_path() +
                        " --phase-mode cophase --out " + out.string()) == 0);
        json j = json::parse(slurp(out));
        for (const char* field :
             {"scheme", "chosen_ue", "chosen_uav", "lambda2_before",
              "lambda2_after", "relaxation_value", "iterations"})
            CHECK(j.contains(field));
        CHECK(j["scheme"] == "exhaustive");
        REQUIRE(j["chosen_ue"].is_number_integer());
        CHECK(j["chosen_ue"].get<int>() >= 1);
        CHECK(j["chosen_ue"].get<int>() <= 4);
        CHECK(j["chosen_uav"].get<int>() >= 1);
        CHECK(j["chosen_uav"].get<int>() <= 4);
        CHECK(j["relaxation_value"].is_null());
        CHECK(j["lambda2_after"].get<double>() >=
              j["lambda2_before"].get<double>() - 1e-12);
    }
    SUBCASE("sdp keeps the relaxation value above the rounded one") {
        REQUIRE(run_cli("solve --scheme sdp --config " + cfg_path() +
                        " --phase-mode cophase --out " + out.string()) == 0);
        json j = json::parse(slurp(out));
        CHECK(j["scheme"] == "sdp-relaxation");
        REQUIRE(j["relaxation_value"].is_number());
        CHECK(j["relaxation_value"].get<double>() >=
              j["lambda2_after"].get<double>() - 1e-9);
        CHECK(j["iterations"].get<int>() >= 1);
    }
    SUBCASE("original never picks an edge") {
        REQUIRE(run_cli("solve --scheme original --config " + cfg_path() +
                        " --out " + out.string()) == 0);
        json j = json::parse(slurp(out));
        CHECK(j["chosen_ue"].is_null());
        CHECK(j["chosen_uav"].is_null());
        CHECK(j["lambda2_after"] == j["lambda2_before"]);
    }
    SUBCASE("linear needs --ue on multi-UE scenarios") {
        CHECK(run_cli("solve --scheme linear --config " + cfg_path()) == 2);
        CHECK(run_cli("solve --scheme linear --ue 99 --config " +
                      cfg_path()) == 2);
        REQUIRE(run_cli("solve --scheme linear --ue 2 --config " + cfg_path() +
                        " --phase-mode cophase --out " + out.string()) == 0);
        json j = json::parse(slurp(out));
        if (!j["chosen_ue"].is_null()) CHECK(j["chosen_ue"] == 2);
    }
}

TEST_CASE("cli: unwritable output maps to the I/O exit code") {
    CHECK(run_cli("solve --scheme original --config " + cfg_path() +
                  " --out /nonexistent-dir/x.json") == 3);
}

TEST_CASE("cli: sweep produces a CSV and is reproducible") {
    fs::path a = work_dir() / "sweep_a.csv";
    fs::path b = work_dir() / "sweep_b.csv";
    std::string common = "sweep-uav --config " + cfg_path() +
                         " --values 2,3 --iterations 2 --seed 11"
                         " --schemes original,exhaustive --phase-mode cophase";
    REQUIRE(run_cli(common + " --out " + a.string()) == 0);
    REQUIRE(run_cli(common + " --out " + b.string()) == 0);

    std::string text = slurp(a);
    CHECK(text.rfind("scheme,swept_parameter,swept_value,mean_lambda2,"
                     "std_lambda2,iterations,fraction_noop\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 5); // header + 4 rows
    CHECK(text == slurp(b));

    CHECK(run_cli("sweep-uav --config " + cfg_path() + " --values 4,2") == 2);
}

TEST_CASE("cli: graph files round-trip through solve") {
    fs::path g1 = work_dir() / "solved.graph";
    fs::path j1p = work_dir() / "solve1.json";
    fs::path j2p = work_dir() / "solve2.json";

    REQUIRE(run_cli("solve --scheme exhaustive --config " + cfg_path() +
                    " --phase-mode cophase --graph-out " + g1.string() +
                    " --out " + j1p.string()) == 0);
    risnet::Graph g = risnet::read_edge_list(g1.string());
    CHECK(g.num_nodes == 8);
    bool has_ris_edge = false;
    for (const risnet::Edge& e : g.edges)
        if (e.tag == risnet::EdgeTag::Ris) has_ris_edge = true;
    CHECK(has_ris_edge);

    // re-ingesting the solved graph: its baseline equals the solved value
    REQUIRE(run_cli("solve --scheme original --config " + cfg_path() +
                    " --graph-in " + g1.string() + " --out " +
                    j2p.string()) == 0);
    json j1 = json::parse(slurp(j1p));
    json j2 = json::parse(slurp(j2p));
    CHECK(j2["lambda2_before"].get<double>() ==
          doctest::Approx(j1["lambda2_after"].get<double>()).epsilon(1e-12));

    // a graph file sized for a different scenario is rejected
    fs::path small = write_file("small.graph", "3 1\n1 2 uav-uav\n");
    CHECK(run_cli("solve --scheme original --config " + cfg_path() +
                  " --graph-in " + small.string()) == 2);
    CHECK(run_cli("solve --scheme original --config " + cfg_path() +
                  " --graph-in /nonexistent.graph") == 3);
}
