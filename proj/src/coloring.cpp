#include "ovc/coloring.hpp"

#include <string>
#include <vector>

namespace ovc {

namespace {

std::string elem_name(ColorTarget t) {
    return t == ColorTarget::vertex ? "vertex" : "edge";
}

}  // namespace

std::string properness_violation(const Graph& g, const Coloring& c) {
    const int count = c.target == ColorTarget::vertex ? g.vertex_count()
                                                      : g.edge_count();
    if (static_cast<int>(c.assignment.size()) != count)
        return "assignment covers " + std::to_string(c.assignment.size()) +
               " elements, graph has " + std::to_string(count);
    if (c.k < 0) return "negative color count";
    std::vector<char> used(c.k, 0);
    for (int i = 0; i < count; ++i) {
        const int col = c.assignment[i];
        if (col < 0 || col >= c.k)
            return elem_name(c.target) + " " + std::to_string(i) +
                   " has color " + std::to_string(col) + " outside 0.." +
                   std::to_string(c.k - 1);
        used[col] = 1;
    }
    for (int col = 0; col < c.k; ++col)
        if (!used[col]) return "color " + std::to_string(col) + " is unused";

    if (c.target == ColorTarget::vertex) {
        for (const auto& e : g.edges())
            if (c.assignment[e.u] == c.assignment[e.v])
                return "adjacent vertices " + std::to_string(e.u) + "," +
                       std::to_string(e.v) + " share color " +
                       std::to_string(c.assignment[e.u]);
    } else {
        for (int v = 0; v < g.vertex_count(); ++v) {
            auto inc = g.incident_edges(v);
            for (std::size_t i = 0; i < inc.size(); ++i)
                for (std::size_t j = i + 1; j < inc.size(); ++j)
                    if (c.assignment[inc[i]] == c.assignment[inc[j]])
                        return "edges " + std::to_string(inc[i]) + "," +
                               std::to_string(inc[j]) + " at vertex " +
                               std::to_string(v) + " share color " +
                               std::to_string(c.assignment[inc[i]]);
        }
    }
    return {};
}

bool is_proper(const Graph& g, const Coloring& c) {
    return properness_violation(g, c).empty();
}

}  // namespace ovc
