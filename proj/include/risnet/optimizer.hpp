#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "risnet/channel.hpp"
#include "risnet/scenario.hpp"
#include "risnet/spectral.hpp"

namespace risnet {

/// One admissible UE-RIS-UAV association: the reflected link (ue, uav)
/// that could be added to the base graph.
struct CandidateEdge {
    int ue = 0;  ///< UE index u in 0..U-1
    int uav = 0; ///< UAV index a in 0..A-1
    IncidenceVector incidence; ///< joins nodes u and U+a
    double ris_snr_db = 0.0;   ///< achieved with the configured phase mode
    PhaseConfig phases;
};

/// Feasible point of the relaxed association problem: z on the unit
/// simplex over the candidate list, with the connectivity it achieves.
struct AssociationVector {
    Eigen::VectorXd z;
    double value = 0.0; ///< lambda2 of the weighted Laplacian at z
    int iterations = 0; ///< ascent iterations actually performed
};

enum class Scheme { Original, Random, LinearSearch, SdpRelaxation, Exhaustive };

const char* scheme_name(Scheme s);

struct OptimizationResult {
    Scheme scheme = Scheme::Original;
    std::optional<CandidateEdge> chosen;
    double lambda2_before = 0.0;
    double lambda2_after = 0.0;
    std::optional<double> relaxation_value;
    int iterations = 0;
};

/// Ascent knobs; the defaults are the documented behavior.
struct SolverOptions {
    double eta0 = 1.0;        ///< step scale, eta_t = eta0 / sqrt(t + 1)
    int max_iters = 1000;
    int plateau_window = 100; ///< stop when best improves < plateau_tol
    double plateau_tol = 1e-7; ///< over this many consecutive iterations
    double support_eps = 1e-3; ///< final check of unit vectors in supp(z)
};

/// All admissible associations in ascending (ue, uav) order: pairs not
/// already connected directly whose reflected SNR under the chosen
/// phase mode meets gamma0_ris (and the optional D0 distance gate).
std::vector<CandidateEdge> enumerate_candidates(const Scenario& sc,
                                                const Graph& g,
                                                std::optional<int> ue_filter,
                                                PhaseMode mode);

/// Optimal single-UE selection: evaluates lambda2 with every candidate
/// edge added and returns the maximizer (lowest UAV index on ties).
/// All candidates must belong to the same UE.
OptimizationResult case1_linear_search(const Scenario& sc, const Graph& g,
                                       const std::vector<CandidateEdge>& candidates);

/// L'(z) = L + sum_l z_l a_l a_l^T.
Eigen::MatrixXd laplacian_of_z(const Laplacian& L,
                               const std::vector<CandidateEdge>& candidates,
                               const Eigen::VectorXd& z);

/// Supergradient of z -> lambda2(L'(z)): g_l = (v_n - v_m)^2 with v the
/// unit Fiedler vector of L_of_z (the exact gradient when lambda2 is
/// simple).
Eigen::VectorXd supergradient(const Eigen::MatrixXd& L_of_z,
                              const std::vector<CandidateEdge>& candidates);

/// Euclidean projection onto {z : sum z = 1, z >= 0} by the sort-based
/// threshold method.
Eigen::VectorXd project_simplex(const Eigen::VectorXd& y);

/// Projected supergradient ascent on the relaxed problem from the
/// uniform start, tracking the best iterate; finishes with a check of
/// the unit vectors in the best iterate's support so the returned value
/// never trails the best single candidate reachable from it.
/// Throws DomainError on an empty candidate list.
AssociationVector solve_relaxation(const Laplacian& L,
                                   const std::vector<CandidateEdge>& candidates,
                                   const SolverOptions& opts = {});

/// Feasibility of the semidefinite constraint q (I - 11^T/V) <= L'(z),
/// equivalent to q <= lambda2(L'(z)) since both sides annihilate 1.
bool lmi_check(double q, const Eigen::MatrixXd& L_of_z);

/// Index of the maximum entry of z, lowest index on ties.
int round_z(const AssociationVector& av);

/// Brute force over all candidates; argmax with lowest index on ties.
OptimizationResult exhaustive_oracle(const Laplacian& L,
                                     const std::vector<CandidateEdge>& candidates);

/// Uniformly random candidate pick from a seeded generator.
OptimizationResult random_scheme(const Laplacian& L,
                                 const std::vector<CandidateEdge>& candidates,
                                 std::uint64_t seed);

/// Relax-then-round pipeline: solve_relaxation, round_z, evaluate the
/// chosen edge. No-op result when the candidate list is empty.
OptimizationResult case2_sdp(const Laplacian& L,
                             const std::vector<CandidateEdge>& candidates,
                             const SolverOptions& opts = {});

} // namespace risnet
