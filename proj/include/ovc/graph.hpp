#pragma once

#include <compare>
#include <utility>
#include <vector>

namespace ovc {

/// An edge by its endpoints, normalized so that u < v.
struct EdgeId {
    int u = 0;
    int v = 0;
    friend bool operator==(const EdgeId&, const EdgeId&) = default;
    friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Edges live in a lexicographically sorted list; the position of an edge in
/// that list is its stable edge index, which line graphs and edge colorings
/// refer back to. Instances are immutable after construction and safe to
/// share across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<EdgeId>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    /// Index of (u,v) in edges(), or -1 when absent.
    int edge_index(int u, int v) const;
    /// Edge indices incident to v, ascending.
    std::vector<int> incident_edges(int v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<EdgeId> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Join: disjoint union plus every edge between the two vertex sets.
/// Vertices of g2 are shifted up by g1.vertex_count().
Graph join(const Graph& g1, const Graph& g2);

struct LineGraph {
    Graph graph;
    /// Vertex i of graph corresponds to this edge of the base graph
    /// (identical to base.edges(), kept explicit for callers).
    std::vector<EdgeId> vertex_edges;
};

/// Line graph L(g): one vertex per edge of g, adjacent iff the edges share
/// an endpoint.
LineGraph line_graph(const Graph& g);

struct DegreeProfile {
    int max_degree = 0;
    bool regular = true;
    std::vector<int> sequence;  // sorted descending
};

DegreeProfile degree_profile(const Graph& g);

}  // namespace ovc
