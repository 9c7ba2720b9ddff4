#include "risnet/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <fstream>
#include <sstream>

#include "risnet/channel.hpp"
#include "risnet/errors.hpp"

namespace risnet {

const char* edge_tag_name(EdgeTag tag) {
    switch (tag) {
        case EdgeTag::UeUav: return "ue-uav";
        case EdgeTag::UavUav: return "uav-uav";
        case EdgeTag::Ris: return "ris";
    }
    return "?";
}

EdgeTag edge_tag_from_name(const std::string& name) {
    if (name == "ue-uav") return EdgeTag::UeUav;
    if (name == "uav-uav") return EdgeTag::UavUav;
    if (name == "ris") return EdgeTag::Ris;
    throw IoError("unknown edge tag '" + name + "'");
}

bool Graph::has_edge(int n, int m) const {
    if (n > m) std::swap(n, m);
    for (const Edge& e : edges)
        if (e.n == n && e.m == m) return true;
    return false;
}

Eigen::VectorXd IncidenceVector::dense(int num_nodes) const {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(num_nodes);
    a[n] = 1.0;
    a[m] = -1.0;
    return a;
}

Graph build_graph(const Scenario& sc) {
    Graph g;
    const int U = sc.num_ue();
    const int A = sc.num_uav();
    g.num_nodes = U + A;
    for (int u = 0; u < U; ++u) {
        for (int a = 0; a < A; ++a) {
            double snr = ue_uav_snr_db(sc.ue_positions[u], sc.uav_positions[a],
                                       sc.radio);
            if (snr >= sc.radio.gamma0_ue)
                g.edges.push_back({u, U + a, EdgeTag::UeUav});
        }
    }
    for (int a = 0; a < A; ++a) {
        for (int b = a + 1; b < A; ++b) {
            double snr = uav_uav_snr_db(sc.uav_positions[a], sc.uav_positions[b],
                                        sc.radio);
            if (snr >= sc.radio.gamma0_uav)
                g.edges.push_back({U + a, U + b, EdgeTag::UavUav});
        }
    }
    return g;
}

Laplacian laplacian(const Graph& g) {
    Laplacian L = Laplacian::Zero(g.num_nodes, g.num_nodes);
    for (const Edge& e : g.edges) {
        L(e.n, e.n) += 1.0;
        L(e.m, e.m) += 1.0;
        L(e.n, e.m) -= 1.0;
        L(e.m, e.n) -= 1.0;
    }
    return L;
}

SpectralResult eig_sym(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols())
        throw DimensionError("eig_sym: matrix is not square");
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw DimensionError("eig_sym: matrix is not symmetric within 1e-12");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success)
        throw DomainError("eig_sym: eigendecomposition failed to converge");

    SpectralResult res;
    res.eigenvalues = solver.eigenvalues();
    res.eigenvectors = solver.eigenvectors();
    if (m.rows() >= 2) {
        res.lambda2 = res.eigenvalues[1];
        Eigen::VectorXd v = res.eigenvectors.col(1);
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            if (std::abs(v[i]) > 1e-12) {
                if (v[i] < 0.0) v = -v;
                break;
            }
        }
        res.fiedler_vector = v;
    }
    return res;
}

std::pair<double, Eigen::VectorXd> lambda2(const Graph& g) {
    if (g.num_nodes < 2)
        throw DomainError("lambda2: need at least two nodes");
    SpectralResult res = eig_sym(laplacian(g));
    double l2 = res.lambda2 < 1e-9 ? 0.0 : res.lambda2;
    return {l2, res.fiedler_vector};
}

double lambda2_value(const Eigen::MatrixXd& L) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        L, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()[1];
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.num_nodes << ' ' << g.edges.size() << '\n';
    for (const Edge& e : g.edges)
        out << e.n + 1 << ' ' << e.m + 1 << ' ' << edge_tag_name(e.tag) << '\n';
}

void write_edge_list(const Graph& g, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    write_edge_list(g, f);
    if (!f) throw IoError("write failed on '" + path + "'");
}

Graph read_edge_list(std::istream& in) {
    Graph g;
    std::size_t num_edges = 0;
    if (!(in >> g.num_nodes >> num_edges))
        throw IoError("edge list: malformed header (want 'V E')");
    if (g.num_nodes < 0)
        throw IoError("edge list: negative node count");
    for (std::size_t k = 0; k < num_edges; ++k) {
        int n = 0, m = 0;
        std::string tag;
        if (!(in >> n >> m >> tag))
            throw IoError("edge list: truncated edge line");
        if (n < 1 || m < 1 || n > g.num_nodes || m > g.num_nodes || n == m)
            throw IoError("edge list: bad node pair");
        Edge e;
        e.n = std::min(n, m) - 1;
        e.m = std::max(n, m) - 1;
        e.tag = edge_tag_from_name(tag);
        if (g.has_edge(e.n, e.m))
            throw IoError("edge list: duplicate edge");
        g.edges.push_back(e);
    }
    return g;
}

Graph read_edge_list(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open '" + path + "' for reading");
    return read_edge_list(f);
}

} // namespace risnet
