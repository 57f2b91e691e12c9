#include "ovc/structure.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace ovc {

namespace {

// BFS 2-coloring; returns either per-vertex sides or an odd closed walk
// assembled from the tree paths of a conflicting edge.
struct TwoColoring {
    std::vector<int> side;       // -1 unvisited, else 0/1
    std::vector<int> odd_cycle;  // nonempty iff an odd cycle was found
};

TwoColoring two_color(const Graph& g) {
    const int n = g.vertex_count();
    TwoColoring out;
    out.side.assign(n, -1);
    std::vector<int> parent(n, -1);
    for (int root = 0; root < n; ++root) {
        if (out.side[root] != -1) continue;
        out.side[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (out.side[v] == -1) {
                    out.side[v] = 1 - out.side[u];
                    parent[v] = u;
                    queue.push_back(v);
                } else if (out.side[v] == out.side[u]) {
                    // Both tree paths to the root plus edge (u,v) close an
                    // odd cycle through their lowest common ancestor.
                    std::vector<int> pu{u}, pv{v};
                    std::vector<char> on_u(n, 0);
                    for (int x = u; x != -1; x = parent[x]) on_u[x] = 1;
                    int meet = v;
                    while (!on_u[meet]) {
                        meet = parent[meet];
                        pv.push_back(meet);
                    }
                    while (pu.back() != meet) pu.push_back(parent[pu.back()]);
                    pu.pop_back();  // drop the meet vertex, pv carries it
                    out.odd_cycle.assign(pv.rbegin(), pv.rend());
                    out.odd_cycle.insert(out.odd_cycle.end(), pu.begin(), pu.end());
                    return out;
                }
            }
        }
    }
    return out;
}

}  // namespace

std::optional<Bipartition> is_bipartite(const Graph& g) {
    TwoColoring tc = two_color(g);
    if (!tc.odd_cycle.empty()) return std::nullopt;
    Bipartition p;
    for (int v = 0; v < g.vertex_count(); ++v)
        p.sides[tc.side[v] == 1 ? 1 : 0].push_back(v);
    return p;
}

std::optional<std::vector<int>> find_odd_cycle(const Graph& g) {
    TwoColoring tc = two_color(g);
    if (tc.odd_cycle.empty()) return std::nullopt;
    return tc.odd_cycle;
}

namespace {

struct HamSearch {
    const Graph& g;
    int n;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<int> path;
    std::vector<char> used;
    std::vector<int> scratch;

    explicit HamSearch(const Graph& graph, std::uint64_t node_budget)
        : g(graph), n(graph.vertex_count()), budget(node_budget),
          used(n, 0), scratch(n, 0) {}

    // The unvisited vertices plus the current endpoint must stay connected,
    // every unvisited vertex needs two usable neighbors, and some unvisited
    // vertex must still reach the start.
    bool feasible(int last) {
        const int remaining = n - static_cast<int>(path.size());
        if (remaining == 0) return true;
        std::vector<int>& mark = scratch;
        std::fill(mark.begin(), mark.end(), 0);
        std::vector<int> stack{last};
        mark[last] = 1;
        int seen = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u)) {
                if (used[v] || mark[v]) continue;
                mark[v] = 1;
                ++seen;
                stack.push_back(v);
            }
        }
        if (seen != remaining) return false;
        bool start_reachable = false;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            int avail = 0;
            for (int w : g.neighbors(v)) {
                if (!used[w] || w == last || w == 0) ++avail;
                if (w == 0) start_reachable = true;
            }
            if (avail < 2) return false;
        }
        return start_reachable;
    }

    bool extend(int last) {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        if (static_cast<int>(path.size()) == n)
            return g.has_edge(last, 0);
        if (!feasible(last)) return false;
        for (int w : g.neighbors(last)) {
            if (used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            if (extend(w)) return true;
            if (out_of_budget) return false;
            path.pop_back();
            used[w] = 0;
        }
        return false;
    }
};

}  // namespace

HamiltonianResult hamiltonian_cycle(const Graph& g, std::uint64_t node_budget) {
    if (g.vertex_count() < 3)
        throw std::invalid_argument("hamiltonian_cycle requires n >= 3");
    HamiltonianResult result;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) < 2) return result;  // a cycle needs degree >= 2

    HamSearch search(g, node_budget);
    search.used[0] = 1;
    search.path.push_back(0);
    if (search.extend(0)) {
        result.status = SearchStatus::found;
        result.cycle = search.path;
    } else {
        result.status = search.out_of_budget ? SearchStatus::budget_exceeded
                                             : SearchStatus::exhausted;
    }
    result.nodes = search.nodes;
    return result;
}

bool is_planar(const Graph& g) {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS,
                                             boost::undirectedS>;
    BoostGraph bg(g.vertex_count());
    for (const auto& e : g.edges()) boost::add_edge(e.u, e.v, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

namespace {

struct ArticulationScan {
    const Graph& g;
    std::vector<int> disc, low;
    int timer = 0;
    bool has_cut = false;
    int visited = 0;

    explicit ArticulationScan(const Graph& graph)
        : g(graph), disc(graph.vertex_count(), -1), low(graph.vertex_count(), -1) {}

    void dfs(int u, int parent) {
        disc[u] = low[u] = timer++;
        ++visited;
        int children = 0;
        for (int v : g.neighbors(u)) {
            if (disc[v] == -1) {
                ++children;
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (parent != -1 && low[v] >= disc[u]) has_cut = true;
            } else if (v != parent) {
                low[u] = std::min(low[u], disc[v]);
            }
        }
        if (parent == -1 && children > 1) has_cut = true;
    }
};

}  // namespace

bool is_biconnected(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) return false;
    ArticulationScan scan(g);
    scan.dfs(0, -1);
    return scan.visited == n && !scan.has_cut;
}

namespace {

bool match_rest(const Graph& g, std::vector<char>& covered,
                std::vector<EdgeId>& matching) {
    int v = -1;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (!covered[u]) {
            v = u;
            break;
        }
    if (v == -1) return true;
    for (int w : g.neighbors(v)) {
        if (covered[w]) continue;
        covered[v] = covered[w] = 1;
        matching.push_back({std::min(v, w), std::max(v, w)});
        if (match_rest(g, covered, matching)) return true;
        matching.pop_back();
        covered[v] = covered[w] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<EdgeId>> has_perfect_matching(const Graph& g) {
    if (g.vertex_count() % 2 != 0) return std::nullopt;
    std::vector<char> covered(g.vertex_count(), 0);
    std::vector<EdgeId> matching;
    if (match_rest(g, covered, matching)) return matching;
    return std::nullopt;
}

}  // namespace ovc
