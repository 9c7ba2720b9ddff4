#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "risnet/scenario.hpp"

namespace risnet {

enum class EdgeTag { UeUav, UavUav, Ris };

const char* edge_tag_name(EdgeTag tag);
EdgeTag edge_tag_from_name(const std::string& name);

/// Undirected edge between node indices n < m (0-based internally;
/// text formats use 1-based ids).
struct Edge {
    int n = 0;
    int m = 0;
    EdgeTag tag = EdgeTag::UeUav;
};

struct Graph {
    int num_nodes = 0;
    std::vector<Edge> edges;

    bool has_edge(int n, int m) const;
};

/// Incidence vector of one edge: +1 at n, -1 at m, zero elsewhere.
struct IncidenceVector {
    int n = 0;
    int m = 0;

    Eigen::VectorXd dense(int num_nodes) const;
};

using Laplacian = Eigen::MatrixXd;

struct SpectralResult {
    Eigen::VectorXd eigenvalues;  ///< ascending
    Eigen::MatrixXd eigenvectors; ///< orthonormal, column-aligned
    double lambda2 = 0.0;         ///< eigenvalues[1] (when V >= 2)
    Eigen::VectorXd fiedler_vector;
};

/// Thresholded graph construction: UE-UAV edges where the direct SNR
/// meets gamma0_ue, UAV-UAV edges where it meets gamma0_uav. UEs never
/// connect to each other and the surface is not a node.
Graph build_graph(const Scenario& sc);

/// L = sum_k a_k a_k^T; diagonal = degrees, off-diagonal in {0, -1}.
Laplacian laplacian(const Graph& g);

/// Full symmetric eigendecomposition, eigenvalues ascending. The Fiedler
/// vector's sign is fixed by making its first nonzero component positive.
/// Throws DimensionError when the input is not symmetric within 1e-12.
SpectralResult eig_sym(const Eigen::MatrixXd& m);

/// Algebraic connectivity and Fiedler vector of a graph; values below
/// 1e-9 clamp to zero. Throws DomainError for graphs with fewer than
/// two nodes.
std::pair<double, Eigen::VectorXd> lambda2(const Graph& g);

/// lambda2 of an explicit Laplacian-like matrix (no clamping).
double lambda2_value(const Eigen::MatrixXd& L);

/// Edge-list text format: first line "V E", then one "n m tag" line per
/// edge with 1-based node ids and tag in {ue-uav, uav-uav, ris}.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list(const Graph& g, const std::string& path);
Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::string& path);

} // namespace risnet
