#include "risnet/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "risnet/errors.hpp"
#include "risnet/rng.hpp"

namespace risnet {

const char* swept_param_name(SweptParam p) {
    switch (p) {
        case SweptParam::NumUav: return "num_uav";
        case SweptParam::NumUe: return "num_ue";
        case SweptParam::Gamma0Ris: return "gamma0_ris";
    }
    return "?";
}

InstanceResult run_instance(const Scenario& sc,
                            const std::vector<Scheme>& schemes,
                            PhaseMode mode) {
    Graph g = build_graph(sc);
    Laplacian L = laplacian(g);
    std::vector<CandidateEdge> candidates =
        enumerate_candidates(sc, g, std::nullopt, mode);

    InstanceResult out;
    out.num_candidates = static_cast<int>(candidates.size());
    out.noop = candidates.empty();

    for (Scheme s : schemes) {
        switch (s) {
            case Scheme::Original: {
                auto [l2, v] = lambda2(g);
                out.lambda2[s] = l2;
                break;
            }
            case Scheme::Random: {
                std::uint64_t pick_seed =
                    mix64(sc.seed ^ 0xA5C3E671B09D24F1ull);
                out.lambda2[s] = random_scheme(L, candidates, pick_seed)
                                     .lambda2_after;
                break;
            }
            case Scheme::LinearSearch: {
                if (sc.num_ue() != 1)
                    throw ConfigError(
                        "linear-search scheme needs exactly one UE");
                out.lambda2[s] =
                    case1_linear_search(sc, g, candidates).lambda2_after;
                break;
            }
            case Scheme::SdpRelaxation:
                out.lambda2[s] = case2_sdp(L, candidates).lambda2_after;
                break;
            case Scheme::Exhaustive:
                out.lambda2[s] =
                    exhaustive_oracle(L, candidates).lambda2_after;
                break;
        }
    }
    return out;
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
    if (spec.values.empty())
        throw ConfigError("run_sweep: no swept values");
    if (!std::is_sorted(spec.values.begin(), spec.values.end()))
        throw ConfigError("run_sweep: swept values must be ascending");
    if (spec.iterations < 1)
        throw ConfigError("run_sweep: iterations must be at least 1");
    if (spec.schemes.empty())
        throw ConfigError("run_sweep: no schemes requested");

    std::vector<SweepRecord> records;
    for (std::size_t vi = 0; vi < spec.values.size(); ++vi) {
        double value = spec.values[vi];
        SimConfig cfg = spec.base;
        switch (spec.param) {
            case SweptParam::NumUav:
                if (value != std::floor(value) || value < 1)
                    throw ConfigError("run_sweep: num_uav values must be "
                                      "positive integers");
                cfg.num_uav = static_cast<int>(value);
                break;
            case SweptParam::NumUe:
                if (value != std::floor(value) || value < 1)
                    throw ConfigError("run_sweep: num_ue values must be "
                                      "positive integers");
                cfg.num_ue = static_cast<int>(value);
                break;
            case SweptParam::Gamma0Ris:
                cfg.radio.gamma0_ris = value;
                break;
        }

        // Welford accumulators per scheme, population convention.
        std::map<Scheme, std::pair<double, double>> acc; // mean, M2
        for (Scheme s : spec.schemes) acc[s] = {0.0, 0.0};
        int noop_count = 0;

        for (int it = 0; it < spec.iterations; ++it) {
            std::uint64_t child = child_seed(spec.base.seed, vi,
                                             static_cast<std::uint64_t>(it));
            Scenario sc = cfg.sample(child);
            InstanceResult res = run_instance(sc, spec.schemes,
                                              spec.phase_mode);
            if (res.noop) ++noop_count;
            double n = static_cast<double>(it + 1);
            for (Scheme s : spec.schemes) {
                double x = res.lambda2.at(s);
                auto& [mean, m2] = acc[s];
                double delta = x - mean;
                mean += delta / n;
                m2 += delta * (x - mean);
            }
        }

        for (Scheme s : spec.schemes) {
            SweepRecord rec;
            rec.scheme = s;
            rec.param = spec.param;
            rec.swept_value = value;
            rec.mean_lambda2 = acc[s].first;
            rec.std_lambda2 =
                std::sqrt(acc[s].second / static_cast<double>(spec.iterations));
            rec.iterations = spec.iterations;
            rec.fraction_noop =
                static_cast<double>(noop_count) / spec.iterations;
            records.push_back(rec);
        }
    }
    return records;
}

void emit_csv(const std::vector<SweepRecord>& records, std::ostream& out) {
    out << "scheme,swept_parameter,swept_value,mean_lambda2,std_lambda2,"
           "iterations,fraction_noop\n";
    char buf[64];
    auto fmt = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.9g", v);
        return std::string(buf);
    };
    for (const SweepRecord& r : records) {
        out << scheme_name(r.scheme) << ',' << swept_param_name(r.param) << ','
            << fmt(r.swept_value) << ',' << fmt(r.mean_lambda2) << ','
            << fmt(r.std_lambda2) << ',' << r.iterations << ','
            << fmt(r.fraction_noop) << '\n';
    }
}

void emit_csv(const std::vector<SweepRecord>& records, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    emit_csv(records, f);
    if (!f) throw IoError("write failed on '" + path + "'");
}

} // namespace risnet
