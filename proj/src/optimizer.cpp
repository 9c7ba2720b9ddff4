#include "risnet/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "risnet/errors.hpp"
#include "risnet/rng.hpp"

namespace risnet {

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::Original: return "original";
        case Scheme::Random: return "random";
        case Scheme::LinearSearch: return "linear-search";
        case Scheme::SdpRelaxation: return "sdp-relaxation";
        case Scheme::Exhaustive: return "exhaustive";
    }
    return "?";
}

namespace {

double clamp_l2(double v) { return v < 1e-9 ? 0.0 : v; }

/// L + a a^T for one candidate, without forming the dense outer product.
Eigen::MatrixXd with_edge(const Laplacian& L, const IncidenceVector& inc) {
    Eigen::MatrixXd Lp = L;
    Lp(inc.n, inc.n) += 1.0;
    Lp(inc.m, inc.m) += 1.0;
    Lp(inc.n, inc.m) -= 1.0;
    Lp(inc.m, inc.n) -= 1.0;
    return Lp;
}

OptimizationResult noop_result(Scheme scheme, double before) {
    OptimizationResult r;
    r.scheme = scheme;
    r.lambda2_before = before;
    r.lambda2_after = before;
    return r;
}

} // namespace

std::vector<CandidateEdge> enumerate_candidates(const Scenario& sc,
                                                const Graph& g,
                                                std::optional<int> ue_filter,
                                                PhaseMode mode) {
    const int U = sc.num_ue();
    const int A = sc.num_uav();
    std::vector<CandidateEdge> out;
    for (int u = 0; u < U; ++u) {
        if (ue_filter && *ue_filter != u) continue;
        ArrayChannel h_ur = ue_ris_channel(sc.ue_positions[u], sc.ris, sc.radio);
        if (sc.radio.D0 && h_ur.distance > *sc.radio.D0) continue;
        for (int a = 0; a < A; ++a) {
            if (g.has_edge(u, U + a)) continue;
            ArrayChannel h_ra =
                ris_uav_channel(sc.uav_positions[a], sc.ris, sc.radio);
            PhaseConfig phases =
                mode == PhaseMode::Paper
                    ? phase_shift_paper(sc.ue_positions[u], sc.uav_positions[a],
                                        sc.ris, sc.radio)
                    : phase_shift_cophase(h_ur, h_ra);
            double snr = ris_snr_db(cascaded_channel(h_ur, h_ra, phases), sc.radio);
            if (snr < sc.radio.gamma0_ris) continue;
            CandidateEdge ce;
            ce.ue = u;
            ce.uav = a;
            ce.incidence = {u, U + a};
            ce.ris_snr_db = snr;
            ce.phases = std::move(phases);
            out.push_back(std::move(ce));
        }
    }
    return out;
}

OptimizationResult case1_linear_search(const Scenario& sc, const Graph& g,
                                       const std::vector<CandidateEdge>& candidates) {
    for (const CandidateEdge& ce : candidates)
        if (ce.ue != candidates.front().ue)
            throw ConfigError("case1_linear_search: candidates span several UEs");
    (void)sc;

    Laplacian L = laplacian(g);
    double before = clamp_l2(lambda2_value(L));
    if (candidates.empty())
        return noop_result(Scheme::LinearSearch, before);

    int best = 0;
    double best_val = lambda2_value(with_edge(L, candidates[0].incidence));
    for (std::size_t l = 1; l < candidates.size(); ++l) {
        double val = lambda2_value(with_edge(L, candidates[l].incidence));
        if (val > best_val) {
            best_val = val;
            best = static_cast<int>(l);
        }
    }
    OptimizationResult r;
    r.scheme = Scheme::LinearSearch;
    r.chosen = candidates[best];
    r.lambda2_before = before;
    r.lambda2_after = clamp_l2(best_val);
    r.iterations = static_cast<int>(candidates.size());
    return r;
}

Eigen::MatrixXd laplacian_of_z(const Laplacian& L,
                               const std::vector<CandidateEdge>& candidates,
                               const Eigen::VectorXd& z) {
    if (z.size() != static_cast<Eigen::Index>(candidates.size()))
        throw DimensionError("laplacian_of_z: z length != candidate count");
    Eigen::MatrixXd Lp = L;
    for (Eigen::Index l = 0; l < z.size(); ++l) {
        const IncidenceVector& inc = candidates[l].incidence;
        double w = z[l];
        Lp(inc.n, inc.n) += w;
        Lp(inc.m, inc.m) += w;
        Lp(inc.n, inc.m) -= w;
        Lp(inc.m, inc.n) -= w;
    }
    return Lp;
}

Eigen::VectorXd supergradient(const Eigen::MatrixXd& L_of_z,
                              const std::vector<CandidateEdge>& candidates) {
    SpectralResult res = eig_sym(L_of_z);
    const Eigen::VectorXd& v = res.fiedler_vector;
    Eigen::VectorXd g(candidates.size());
    for (std::size_t l = 0; l < candidates.size(); ++l) {
        double diff = v[candidates[l].incidence.n] - v[candidates[l].incidence.m];
        g[static_cast<Eigen::Index>(l)] = diff * diff;
    }
    return g;
}

Eigen::VectorXd project_simplex(const Eigen::VectorXd& y) {
    const Eigen::Index n = y.size();
    std::vector<double> u(y.data(), y.data() + n);
    std::sort(u.begin(), u.end(), std::greater<>());
    double css = 0.0;
    double tau = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        css += u[j];
        double t = (css - 1.0) / static_cast<double>(j + 1);
        if (u[j] - t > 0.0) tau = t;
    }
    return (y.array() - tau).cwiseMax(0.0);
}

AssociationVector solve_relaxation(const Laplacian& L,
                                   const std::vector<CandidateEdge>& candidates,
                                   const SolverOptions& opts) {
    const Eigen::Index n = static_cast<Eigen::Index>(candidates.size());
    if (n == 0)
        throw DomainError("solve_relaxation: empty candidate list");

    Eigen::VectorXd z = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
    SpectralResult res = eig_sym(laplacian_of_z(L, candidates, z));
    Eigen::VectorXd best_z = z;
    double best_val = res.lambda2;

    double marker = best_val;
    int stalled = 0;
    int iters = 0;
    for (int t = 0; t < opts.max_iters; ++t) {
        iters = t + 1;
        Eigen::VectorXd g(n);
        for (Eigen::Index l = 0; l < n; ++l) {
            const IncidenceVector& inc = candidates[l].incidence;
            double diff = res.fiedler_vector[inc.n] - res.fiedler_vector[inc.m];
            g[l] = diff * diff;
        }
        double eta = opts.eta0 / std::sqrt(static_cast<double>(t + 1));
        z = project_simplex(z + eta * g);
        res = eig_sym(laplacian_of_z(L, candidates, z));
        if (res.lambda2 > best_val) {
            best_val = res.lambda2;
            best_z = z;
        }
        if (best_val - marker >= opts.plateau_tol) {
            marker = best_val;
            stalled = 0;
        } else if (++stalled >= opts.plateau_window) {
            break;
        }
    }

    // The ascent can stall while oscillating across a nonsmooth ridge;
    // the unit vectors in the support are feasible and cheap to check,
    // and guarantee the returned value dominates the rounded solution.
    for (Eigen::Index l = 0; l < n; ++l) {
        if (best_z[l] <= opts.support_eps) continue;
        double val = lambda2_value(with_edge(L, candidates[l].incidence));
        if (val > best_val) {
            best_val = val;
            best_z = Eigen::VectorXd::Unit(n, l);
        }
    }

    AssociationVector av;
    av.z = std::move(best_z);
    av.value = best_val;
    av.iterations = iters;
    return av;
}

bool lmi_check(double q, const Eigen::MatrixXd& L_of_z) {
    const Eigen::Index V = L_of_z.rows();
    Eigen::MatrixXd form =
        L_of_z - q * (Eigen::MatrixXd::Identity(V, V) -
                      Eigen::MatrixXd::Constant(V, V, 1.0 / static_cast<double>(V)));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        form, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()[0] >= -1e-9;
}

int round_z(const AssociationVector& av) {
    int best = 0;
    for (Eigen::Index l = 1; l < av.z.size(); ++l)
        if (av.z[l] > av.z[best]) best = static_cast<int>(l);
    return best;
}

OptimizationResult exhaustive_oracle(const Laplacian& L,
                                     const std::vector<CandidateEdge>& candidates) {
    double before = clamp_l2(lambda2_value(L));
    if (candidates.empty())
        return noop_result(Scheme::Exhaustive, before);

    int best = 0;
    double best_val = lambda2_value(with_edge(L, candidates[0].incidence));
    for (std::size_t l = 1; l < candidates.size(); ++l) {
        double val = lambda2_value(with_edge(L, candidates[l].incidence));
        if (val > best_val) {
            best_val = val;
            best = static_cast<int>(l);
        }
    }
    OptimizationResult r;
    r.scheme = Scheme::Exhaustive;
    r.chosen = candidates[best];
    r.lambda2_before = before;
    r.lambda2_after = clamp_l2(best_val);
    r.iterations = static_cast<int>(candidates.size());
    return r;
}

OptimizationResult random_scheme(const Laplacian& L,
                                 const std::vector<CandidateEdge>& candidates,
                                 std::uint64_t seed) {
    double before = clamp_l2(lambda2_value(L));
    if (candidates.empty())
        return noop_result(Scheme::Random, before);

    std::mt19937_64 gen(seed);
    std::size_t pick = bounded_index(gen, candidates.size());
    OptimizationResult r;
    r.scheme = Scheme::Random;
    r.chosen = candidates[pick];
    r.lambda2_before = before;
    r.lambda2_after =
        clamp_l2(lambda2_value(with_edge(L, candidates[pick].incidence)));
    r.iterations = 1;
    return r;
}

OptimizationResult case2_sdp(const Laplacian& L,
                             const std::vector<CandidateEdge>& candidates,
                             const SolverOptions& opts) {
    double before = clamp_l2(lambda2_value(L));
    if (candidates.empty())
        return noop_result(Scheme::SdpRelaxation, before);

    AssociationVector av = solve_relaxation(L, candidates, opts);
    int idx = round_z(av);
    OptimizationResult r;
    r.scheme = Scheme::SdpRelaxation;
    r.chosen = candidates[idx];
    r.lambda2_before = before;
    r.lambda2_after =
        clamp_l2(lambda2_value(with_edge(L, candidates[idx].incidence)));
    r.relaxation_value = av.value;
    r.iterations = av.iterations;
    return r;
}

} // namespace risnet
