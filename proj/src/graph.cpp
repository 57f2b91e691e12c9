#include "ovc/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ovc {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    adj_.resize(n_);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a == b)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        if (a < 0 || b < 0 || a >= n_ || b >= n_)
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(a) + "," + std::to_string(b) + ")");
        edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw std::invalid_argument("duplicate edge (" + std::to_string(dup->u) +
                                    "," + std::to_string(dup->v) + ")");
    for (const auto& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_index(int u, int v) const {
    if (!has_edge(u, v)) return -1;
    EdgeId e{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    return static_cast<int>(it - edges_.begin());
}

std::vector<int> Graph::incident_edges(int v) const {
    std::vector<int> out;
    out.reserve(neighbors(v).size());
    for (int w : neighbors(v)) out.push_back(edge_index(v, w));
    std::sort(out.begin(), out.end());
    return out;
}

Graph join(const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g1.edge_count() + g2.edge_count() +
                  static_cast<std::size_t>(n1) * n2);
    for (const auto& e : g1.edges()) edges.emplace_back(e.u, e.v);
    for (const auto& e : g2.edges()) edges.emplace_back(e.u + n1, e.v + n1);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) edges.emplace_back(u, n1 + v);
    return Graph(n1 + n2, edges);
}

LineGraph line_graph(const Graph& g) {
    const int m = g.edge_count();
    std::vector<std::pair<int, int>> edges;
    // Two edges of a simple graph share at most one endpoint, so every
    // adjacency in L(g) arises at exactly one vertex: no duplicates.
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto inc = g.incident_edges(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                edges.emplace_back(inc[i], inc[j]);
    }
    return LineGraph{Graph(m, edges), g.edges()};
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.sequence.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) p.sequence.push_back(g.degree(v));
    std::sort(p.sequence.begin(), p.sequence.end(), std::greater<int>());
    p.max_degree = p.sequence.empty() ? 0 : p.sequence.front();
    p.regular = p.sequence.empty() ||
                p.sequence.front() == p.sequence.back();
    return p;
}

}  // namespace ovc
