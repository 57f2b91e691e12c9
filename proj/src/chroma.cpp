#include "ovc/chroma.hpp"

#include "ovc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ovc {

namespace {

// ---------------------------------------------------------------- cliques

struct CliqueSearch {
    const Graph& g;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<int> best;
    std::vector<int> current;

    CliqueSearch(const Graph& graph, std::uint64_t node_budget)
        : g(graph), budget(node_budget) {}

    void expand(const std::vector<int>& candidates) {
        if (++nodes > budget) {
            out_of_budget = true;
            return;
        }
        if (current.size() > best.size()) best = current;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (current.size() + (candidates.size() - i) <= best.size()) return;
            const int v = candidates[i];
            std::vector<int> next;
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                if (g.has_edge(v, candidates[j])) next.push_back(candidates[j]);
            current.push_back(v);
            expand(next);
            current.pop_back();
            if (out_of_budget) return;
        }
    }
};

}  // namespace

CliqueResult max_clique(const Graph& g, std::uint64_t node_budget) {
    CliqueSearch search(g, node_budget);
    // Descending degree with index tie-break keeps the result deterministic.
    std::vector<int> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) > g.degree(b);
    });
    search.expand(order);
    std::sort(search.best.begin(), search.best.end());
    return CliqueResult{search.best, !search.out_of_budget, search.nodes};
}

namespace {

// ------------------------------------------------- DSATUR decision search

// Saturation bookkeeping: per vertex, how many neighbors hold each color.
struct Saturation {
    int k;
    std::vector<int> counts;  // n * k
    std::vector<int> sat;     // number of distinct colors seen at v

    Saturation(int n, int k) : k(k), counts(static_cast<std::size_t>(n) * k, 0), sat(n, 0) {}

    int count(int v, int c) const { return counts[static_cast<std::size_t>(v) * k + c]; }

    void add(int v, int c) {
        if (counts[static_cast<std::size_t>(v) * k + c]++ == 0) ++sat[v];
    }
    void remove(int v, int c) {
        if (--counts[static_cast<std::size_t>(v) * k + c] == 0) --sat[v];
    }
};

struct DecideOutcome {
    enum Kind { colorable, not_colorable, budget } kind = not_colorable;
    std::vector<int> colors;
    std::uint64_t nodes = 0;
};

// Is g k-colorable? DSATUR vertex choice (max saturation, ties to the
// lowest index) with the usual new-color symmetry break.
DecideOutcome decide_k_colorable(const Graph& g, int k, std::uint64_t budget) {
    const int n = g.vertex_count();
    DecideOutcome out;
    if (k <= 0) {
        out.kind = n == 0 ? DecideOutcome::colorable : DecideOutcome::not_colorable;
        return out;
    }
    std::vector<int> colors(n, -1);
    Saturation satur(n, k);
    std::uint64_t nodes = 0;
    bool exceeded = false;

    auto choose = [&]() {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (colors[v] != -1) continue;
            if (pick == -1 || satur.sat[v] > satur.sat[pick]) pick = v;
        }
        return pick;
    };

    auto recurse = [&](auto&& self, int colored, int max_used) -> bool {
        if (++nodes > budget) {
            exceeded = true;
            return false;
        }
        if (colored == n) return true;
        const int v = choose();
        if (satur.sat[v] == k) return false;
        const int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (satur.count(v, c) != 0) continue;
            colors[v] = c;
            for (int w : g.neighbors(v)) satur.add(w, c);
            if (self(self, colored + 1, std::max(max_used, c))) return true;
            for (int w : g.neighbors(v)) satur.remove(w, c);
            colors[v] = -1;
            if (exceeded) return false;
        }
        return false;
    };

    const bool ok = recurse(recurse, 0, -1);
    out.nodes = nodes;
    if (ok) {
        out.kind = DecideOutcome::colorable;
        out.colors = colors;
    } else {
        out.kind = exceeded ? DecideOutcome::budget : DecideOutcome::not_colorable;
    }
    return out;
}

// Greedy DSATUR pass: proper coloring with an unconstrained palette.
Coloring greedy_coloring(const Graph& g) {
    const int n = g.vertex_count();
    const int cap = n == 0 ? 1 : n;
    std::vector<int> colors(n, -1);
    Saturation satur(n, cap);
    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int u = 0; u < n; ++u) {
            if (colors[u] != -1) continue;
            if (v == -1 || satur.sat[u] > satur.sat[v]) v = u;
        }
        int c = 0;
        while (satur.count(v, c) != 0) ++c;
        colors[v] = c;
        for (int w : g.neighbors(v)) satur.add(w, c);
    }
    const int k = n == 0 ? 0 : 1 + *std::max_element(colors.begin(), colors.end());
    return Coloring{ColorTarget::vertex, k, colors};
}

// Relabels colors to 0..k'-1 in order of first use so every color occurs.
Coloring compact(std::vector<int> colors) {
    std::vector<int> remap;
    std::vector<int> seen;
    for (int& c : colors) {
        auto it = std::find(seen.begin(), seen.end(), c);
        if (it == seen.end()) {
            seen.push_back(c);
            remap.push_back(static_cast<int>(seen.size()) - 1);
            c = remap.back();
        } else {
            c = remap[it - seen.begin()];
        }
    }
    return Coloring{ColorTarget::vertex, static_cast<int>(seen.size()), colors};
}

ChromaResult chromatic_core(const Graph& g, std::optional<int> lower_hint,
                            std::optional<int> upper_hint,
                            std::uint64_t node_budget, int forced_lower,
                            BoundKind forced_kind) {
    const int n = g.vertex_count();
    if (lower_hint && upper_hint && *lower_hint > *upper_hint)
        throw std::invalid_argument("invalid hints: lower > upper");

    ChromaResult r;
    if (n == 0) {
        r.status = ChromaStatus::exact;
        r.value = r.lower = r.upper = 0;
        r.certificate = Coloring{ColorTarget::vertex, 0, {}};
        r.witness = {BoundKind::clique, 0, {}};
        return r;
    }

    CliqueResult clique = max_clique(g, node_budget);
    r.nodes += clique.nodes;
    int lower = static_cast<int>(clique.vertices.size());  // valid even if cut off
    BoundKind lower_kind = BoundKind::clique;
    if (forced_lower > lower) {
        lower = forced_lower;
        lower_kind = forced_kind;
    }
    if (lower_hint && *lower_hint > lower) {
        lower = *lower_hint;
        lower_kind = BoundKind::hint;
    }

    Coloring best = greedy_coloring(g);
    if (upper_hint && *upper_hint < lower)
        throw std::invalid_argument("invalid hints: upper below proven lower bound");

    while (best.k > lower) {
        const std::uint64_t spent = r.nodes;
        if (spent >= node_budget) break;
        DecideOutcome attempt =
            decide_k_colorable(g, best.k - 1, node_budget - spent);
        r.nodes += attempt.nodes;
        if (attempt.kind == DecideOutcome::colorable) {
            best = compact(std::move(attempt.colors));
        } else if (attempt.kind == DecideOutcome::not_colorable) {
            lower = best.k;
            lower_kind = BoundKind::search_exhausted;
            break;
        } else {
            break;  // budget spent mid-decision
        }
    }

    r.lower = lower;
    r.upper = best.k;
    r.certificate = best;
    if (lower == best.k) {
        r.status = ChromaStatus::exact;
        r.value = best.k;
        r.witness.kind = lower_kind;
        r.witness.value = best.k;
        if (lower_kind == BoundKind::clique) r.witness.clique = clique.vertices;
    } else {
        r.status = ChromaStatus::inconclusive;
        r.value = 0;
        r.witness.kind = lower_kind;
        r.witness.value = lower;
        if (lower_kind == BoundKind::clique) r.witness.clique = clique.vertices;
    }
    return r;
}

}  // namespace

ChromaResult chromatic_number(const Graph& g, std::optional<int> lower_hint,
                              std::optional<int> upper_hint,
                              std::uint64_t node_budget) {
    return chromatic_core(g, lower_hint, upper_hint, node_budget, 0,
                          BoundKind::clique);
}

ChromaResult chromatic_index(const Graph& g, std::uint64_t node_budget) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("chromatic_index requires at least one edge");
    const DegreeProfile prof = degree_profile(g);
    const int delta = prof.max_degree;

    // A k-regular graph of odd order has no k-edge-coloring: each color
    // class would be a perfect matching.
    int forced_lower = delta;
    BoundKind forced_kind = BoundKind::max_degree;
    if (prof.regular && g.vertex_count() % 2 == 1) {
        forced_lower = delta + 1;
        forced_kind = BoundKind::regular_parity;
    }

    LineGraph lg = line_graph(g);
    ChromaResult r = chromatic_core(lg.graph, std::nullopt, std::nullopt,
                                    node_budget, forced_lower, forced_kind);
    r.certificate.target = ColorTarget::edge;
    if (r.status == ChromaStatus::exact && r.witness.kind == BoundKind::clique) {
        // Report the Vizing-side tags for edge colorings; the clique in
        // L(g) is a vertex star exactly when the bound is the max degree.
        if (r.value == delta) {
            r.witness.kind = BoundKind::max_degree;
            r.witness.clique.clear();
        }
    }
    return r;
}

Coloring tait_3_edge_coloring(const Graph& g, const std::vector<int>& cycle) {
    const int n = g.vertex_count();
    const DegreeProfile prof = degree_profile(g);
    if (!(prof.regular && prof.max_degree == 3))
        throw std::invalid_argument("tait_3_edge_coloring: graph is not cubic");
    if (n % 2 != 0)
        throw std::invalid_argument("tait_3_edge_coloring: odd vertex count");
    if (static_cast<int>(cycle.size()) != n)
        throw std::invalid_argument("tait_3_edge_coloring: cycle does not visit every vertex exactly once");
    std::vector<char> seen(n, 0);
    for (int v : cycle) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("tait_3_edge_coloring: cycle does not visit every vertex exactly once");
        seen[v] = 1;
    }
    std::vector<int> colors(g.edge_count(), 2);  // off-cycle matching
    for (int i = 0; i < n; ++i) {
        const int u = cycle[i], v = cycle[(i + 1) % n];
        const int e = g.edge_index(u, v);
        if (e < 0)
            throw std::invalid_argument("tait_3_edge_coloring: cycle uses non-edge (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        colors[e] = i % 2;
    }
    return Coloring{ColorTarget::edge, 3, colors};
}

}  // namespace ovc
