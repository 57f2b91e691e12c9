#pragma once

#include "ovc/graph.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace ovc::testutil {

/// Erdos-Renyi G(n, p) from a caller-owned engine; deterministic under a
/// fixed seed.
inline Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution flip(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (flip(rng)) edges.emplace_back(i, j);
    return Graph(n, edges);
}

/// Random bipartite graph with both sides nonempty and at least one edge.
inline Graph random_bipartite_graph(int n, double p, std::mt19937& rng) {
    if (n < 2) n = 2;
    std::uniform_int_distribution<int> split(1, n - 1);
    const int a = split(rng);
    std::bernoulli_distribution flip(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = a; j < n; ++j)
            if (flip(rng)) edges.emplace_back(i, j);
    if (edges.empty()) edges.emplace_back(0, a);
    return Graph(n, edges);
}

/// Reference k-colorability by plain backtracking in vertex order; no
/// heuristics shared with the production solver.
inline bool brute_k_colorable(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    if (k <= 0) return false;
    std::vector<int> color(n, -1);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int w : g.neighbors(v))
                if (w < v && color[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (self(self, v + 1)) return true;
            color[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

inline int brute_chromatic_number(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    int k = 1;
    while (!brute_k_colorable(g, k)) ++k;
    return k;
}

/// Reference maximum clique by subset enumeration (n <= ~20).
inline int brute_max_clique_size(const Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> set;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) set.push_back(v);
        if (static_cast<int>(set.size()) <= best) continue;
        bool clique = true;
        for (std::size_t i = 0; i < set.size() && clique; ++i)
            for (std::size_t j = i + 1; j < set.size(); ++j)
                if (!g.has_edge(set[i], set[j])) {
                    clique = false;
                    break;
                }
        if (clique) best = static_cast<int>(set.size());
    }
    return best;
}

/// Line graph straight from the definition: vertices are edges, adjacency
/// is nonempty intersection.
inline Graph brute_line_graph(const Graph& g) {
    const auto& es = g.edges();
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const bool share = es[i].u == es[j].u || es[i].u == es[j].v ||
                               es[i].v == es[j].u || es[i].v == es[j].v;
            if (share) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return Graph(static_cast<int>(es.size()), edges);
}

inline bool validates_as_hamiltonian_cycle(const Graph& g, const std::vector<int>& cycle) {
    const int n = g.vertex_count();
    if (static_cast<int>(cycle.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : cycle) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i < n; ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % n])) return false;
    return true;
}

}  // namespace ovc::testutil
