#pragma once

// Independent oracles and small utilities shared by the unit tests and
// the acceptance runner. Everything here is deliberately implemented
// from first principles (BFS, rank statistics) rather than through the
// library under test.

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <random>
#include <utility>
#include <vector>

#include "risnet/spectral.hpp"

namespace testutil {

/// BFS connectivity oracle.
inline bool bfs_connected(const risnet::Graph& g) {
    if (g.num_nodes == 0) return true;
    std::vector<std::vector<int>> adj(g.num_nodes);
    for (const auto& e : g.edges) {
        adj[e.n].push_back(e.m);
        adj[e.m].push_back(e.n);
    }
    std::vector<char> seen(g.num_nodes, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
        }
    }
    return count == g.num_nodes;
}

/// Erdos-Renyi-style random graph on V nodes with edge probability p.
inline risnet::Graph random_graph(std::mt19937_64& gen, int num_nodes,
                                  double edge_prob) {
    risnet::Graph g;
    g.num_nodes = num_nodes;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int n = 0; n < num_nodes; ++n)
        for (int m = n + 1; m < num_nodes; ++m)
            if (unif(gen) < edge_prob)
                g.edges.push_back({n, m, risnet::EdgeTag::UavUav});
    return g;
}

/// All node pairs absent from g.
inline std::vector<std::pair<int, int>> absent_edges(const risnet::Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int n = 0; n < g.num_nodes; ++n)
        for (int m = n + 1; m < g.num_nodes; ++m)
            if (!g.has_edge(n, m)) out.emplace_back(n, m);
    return out;
}

/// Average ranks (1-based) with ties sharing their mean rank.
inline std::vector<double> average_ranks(const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&x](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
        double avg = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

/// Spearman rank correlation with average-rank tie handling.
inline double spearman(const std::vector<double>& x,
                       const std::vector<double>& y) {
    std::vector<double> rx = average_ranks(x);
    std::vector<double> ry = average_ranks(y);
    const double n = static_cast<double>(x.size());
    double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
    double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
    double num = 0.0, dx = 0.0, dy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += (rx[i] - mx) * (ry[i] - my);
        dx += (rx[i] - mx) * (rx[i] - mx);
        dy += (ry[i] - my) * (ry[i] - my);
    }
    return num / std::sqrt(dx * dy);
}

} // namespace testutil
