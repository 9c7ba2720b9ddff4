#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "risnet/config.hpp"
#include "risnet/errors.hpp"
#include "risnet/harness.hpp"
#include "risnet/optimizer.hpp"
#include "risnet/rng.hpp"

using nlohmann::json;
using namespace risnet;

namespace {

struct CommonArgs {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string phase_mode = "paper";
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "JSON config file");
    cmd->add_option("--seed", args.seed, "override the config seed");
    cmd->add_option("--phase-mode", args.phase_mode,
                    "candidate phase configuration")
        ->check(CLI::IsMember({"paper", "cophase"}));
    cmd->add_option("--out", args.out_path,
                    "output file (stdout when omitted)");
}

SimConfig load_or_default(const CommonArgs& args) {
    SimConfig cfg;
    if (!args.config_path.empty()) cfg = load_config(args.config_path);
    if (args.seed) cfg.seed = *args.seed;
    return cfg;
}

PhaseMode parse_phase_mode(const std::string& name) {
    return name == "cophase" ? PhaseMode::Cophase : PhaseMode::Paper;
}

Scheme parse_scheme(const std::string& name) {
    if (name == "original") return Scheme::Original;
    if (name == "random") return Scheme::Random;
    if (name == "linear") return Scheme::LinearSearch;
    if (name == "sdp") return Scheme::SdpRelaxation;
    if (name == "exhaustive") return Scheme::Exhaustive;
    throw ConfigError("unknown scheme '" + name + "'");
}

std::vector<Scheme> parse_schemes(const std::vector<std::string>& names,
                                  const SimConfig& cfg) {
    std::vector<Scheme> out;
    if (names.empty()) {
        out = {Scheme::Original, Scheme::Random,
               cfg.num_ue == 1 ? Scheme::LinearSearch : Scheme::SdpRelaxation,
               Scheme::Exhaustive};
    } else {
        for (const std::string& n : names) out.push_back(parse_scheme(n));
    }
    return out;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << text;
    if (!f) throw IoError("write failed on '" + path + "'");
}

int run_simulate(const CommonArgs& args,
                 const std::vector<std::string>& scheme_names) {
    SimConfig cfg = load_or_default(args);
    std::vector<Scheme> schemes = parse_schemes(scheme_names, cfg);
    Scenario sc = cfg.sample();
    InstanceResult res =
        run_instance(sc, schemes, parse_phase_mode(args.phase_mode));

    json j;
    j["seed"] = sc.seed;
    j["num_nodes"] = sc.num_nodes();
    j["num_candidates"] = res.num_candidates;
    j["noop"] = res.noop;
    json l2 = json::object();
    for (const auto& [scheme, value] : res.lambda2)
        l2[scheme_name(scheme)] = value;
    j["lambda2"] = l2;
    write_output(j.dump(2) + "\n", args.out_path);
    return 0;
}

int run_sweep_cmd(const CommonArgs& args, SweptParam param,
                  std::vector<double> values, int iterations,
                  const std::vector<std::string>& scheme_names) {
    SimConfig cfg = load_or_default(args);
    SweepSpec spec;
    spec.param = param;
    spec.values = std::move(values);
    spec.iterations = iterations;
    spec.base = cfg;
    spec.phase_mode = parse_phase_mode(args.phase_mode);
    spec.schemes = parse_schemes(scheme_names, cfg);

    std::vector<SweepRecord> records = run_sweep(spec);
    std::ostringstream csv;
    emit_csv(records, csv);
    write_output(csv.str(), args.out_path);
    return 0;
}

json result_to_json(const OptimizationResult& r) {
    json j;
    j["scheme"] = scheme_name(r.scheme);
    if (r.chosen) {
        j["chosen_ue"] = r.chosen->ue + 1;
        j["chosen_uav"] = r.chosen->uav + 1;
    } else {
        j["chosen_ue"] = nullptr;
        j["chosen_uav"] = nullptr;
    }
    j["lambda2_before"] = r.lambda2_before;
    j["lambda2_after"] = r.lambda2_after;
    if (r.relaxation_value)
        j["relaxation_value"] = *r.relaxation_value;
    else
        j["relaxation_value"] = nullptr;
    j["iterations"] = r.iterations;
    return j;
}

int run_solve(const CommonArgs& args, const std::string& scheme_name_in,
              int ue_1based, const std::string& graph_in,
              const std::string& graph_out) {
    SimConfig cfg = load_or_default(args);
    Scheme scheme = parse_scheme(scheme_name_in);
    Scenario sc = cfg.sample();

    Graph g;
    if (graph_in.empty()) {
        g = build_graph(sc);
    } else {
        g = read_edge_list(graph_in);
        if (g.num_nodes != sc.num_nodes())
            throw ConfigError("graph file has " + std::to_string(g.num_nodes) +
                              " nodes but the scenario has " +
                              std::to_string(sc.num_nodes()));
    }

    std::optional<int> ue_filter;
    if (ue_1based > 0) {
        if (ue_1based > sc.num_ue())
            throw ConfigError("--ue out of range (scenario has " +
                              std::to_string(sc.num_ue()) + " UEs)");
        ue_filter = ue_1based - 1;
    }
    if (scheme == Scheme::LinearSearch && !ue_filter) {
        if (sc.num_ue() != 1)
            throw ConfigError("linear scheme needs --ue when the scenario "
                              "has several UEs");
        ue_filter = 0;
    }

    PhaseMode mode = parse_phase_mode(args.phase_mode);
    std::vector<CandidateEdge> candidates =
        scheme == Scheme::Original
            ? std::vector<CandidateEdge>{}
            : enumerate_candidates(sc, g, ue_filter, mode);
    Laplacian L = laplacian(g);

    OptimizationResult res;
    switch (scheme) {
        case Scheme::Original: {
            res.scheme = Scheme::Original;
            auto [l2, v] = lambda2(g);
            res.lambda2_before = l2;
            res.lambda2_after = l2;
            break;
        }
        case Scheme::Random:
            res = random_scheme(L, candidates,
                                mix64(sc.seed ^ 0xA5C3E671B09D24F1ull));
            break;
        case Scheme::LinearSearch:
            res = case1_linear_search(sc, g, candidates);
            break;
        case Scheme::SdpRelaxation:
            res = case2_sdp(L, candidates);
            break;
        case Scheme::Exhaustive:
            res = exhaustive_oracle(L, candidates);
            break;
    }

    if (!graph_out.empty()) {
        Graph result_graph = g;
        if (res.chosen) {
            result_graph.edges.push_back({res.chosen->incidence.n,
                                          res.chosen->incidence.m,
                                          EdgeTag::Ris});
        }
        write_edge_list(result_graph, graph_out);
    }
    write_output(result_to_json(res).dump(2) + "\n", args.out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"RIS-assisted UAV network connectivity simulator"};
    app.require_subcommand(1);

    CommonArgs sim_args, uav_args, ue_args, snr_args, solve_args;
    std::vector<std::string> sim_schemes, uav_schemes, ue_schemes, snr_schemes;
    std::vector<double> uav_values, ue_values, snr_values;
    int uav_iters = 500, ue_iters = 500, snr_iters = 500;
    std::string solve_scheme = "sdp";
    int solve_ue = 0;
    std::string graph_in, graph_out;

    CLI::App* sim = app.add_subcommand(
        "simulate", "evaluate all schemes on one sampled instance");
    add_common(sim, sim_args);
    sim->add_option("--schemes", sim_schemes, "comma-separated scheme list")
        ->delimiter(',');

    auto add_sweep = [&](const char* name, const char* desc, CommonArgs& args,
                         std::vector<double>& values, int& iters,
                         std::vector<std::string>& schemes) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        add_common(cmd, args);
        cmd->add_option("--values", values, "swept values (ascending)")
            ->delimiter(',');
        cmd->add_option("--iterations", iters, "Monte Carlo iterations per value");
        cmd->add_option("--schemes", schemes, "comma-separated scheme list")
            ->delimiter(',');
        return cmd;
    };
    CLI::App* swu = add_sweep("sweep-uav", "mean connectivity vs UAV count",
                              uav_args, uav_values, uav_iters, uav_schemes);
    CLI::App* swe = add_sweep("sweep-ue", "mean connectivity vs UE count",
                              ue_args, ue_values, ue_iters, ue_schemes);
    CLI::App* sws = add_sweep("sweep-snr",
                              "mean connectivity vs reflected-link threshold",
                              snr_args, snr_values, snr_iters, snr_schemes);

    CLI::App* slv = app.add_subcommand(
        "solve", "select one reflected link and report the result");
    add_common(slv, solve_args);
    slv->add_option("--scheme", solve_scheme, "selection scheme")
        ->check(CLI::IsMember({"original", "random", "linear", "sdp",
                               "exhaustive"}));
    slv->add_option("--ue", solve_ue, "restrict candidates to one UE (1-based)");
    slv->add_option("--graph-in", graph_in, "read the base graph (edge list)");
    slv->add_option("--graph-out", graph_out,
                    "write the resulting graph (edge list)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sim->parsed()) return run_simulate(sim_args, sim_schemes);
        if (swu->parsed()) {
            if (uav_values.empty())
                uav_values = {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
            return run_sweep_cmd(uav_args, SweptParam::NumUav, uav_values,
                                 uav_iters, uav_schemes);
        }
        if (swe->parsed()) {
            if (ue_values.empty())
                ue_values = {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14};
            return run_sweep_cmd(ue_args, SweptParam::NumUe, ue_values,
                                 ue_iters, ue_schemes);
        }
        if (sws->parsed()) {
            if (snr_values.empty())
                snr_values = {0, 5, 10, 15, 20, 25, 30, 35};
            return run_sweep_cmd(snr_args, SweptParam::Gamma0Ris, snr_values,
                                 snr_iters, snr_schemes);
        }
        if (slv->parsed())
            return run_solve(solve_args, solve_scheme, solve_ue, graph_in,
                             graph_out);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
