#pragma once

#include "ovc/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace ovc {

struct Bipartition {
    std::array<std::vector<int>, 2> sides;
};

/// Two-colors the graph by BFS. Returns a partition with no intra-class
/// edge, or nullopt iff the graph contains an odd cycle.
std::optional<Bipartition> is_bipartite(const Graph& g);

/// An odd cycle as a closed vertex sequence (first vertex not repeated),
/// or nullopt iff the graph is bipartite.
std::optional<std::vector<int>> find_odd_cycle(const Graph& g);

enum class SearchStatus { found, exhausted, budget_exceeded };

struct HamiltonianResult {
    SearchStatus status = SearchStatus::exhausted;
    std::vector<int> cycle;  // filled iff status == found
    std::uint64_t nodes = 0;
};

/// Exhaustive pruned backtracking (degree forcing + connectivity pruning),
/// exact at desk scale. budget_exceeded means the search was cut off and
/// says nothing about existence. Throws std::invalid_argument for n < 3.
HamiltonianResult hamiltonian_cycle(const Graph& g,
                                    std::uint64_t node_budget = 20'000'000);

bool is_planar(const Graph& g);

/// Connected, no cut vertex, and n >= 3.
bool is_biconnected(const Graph& g);

/// A perfect matching as an edge list, or nullopt when none exists
/// (always nullopt for odd vertex count).
std::optional<std::vector<EdgeId>> has_perfect_matching(const Graph& g);

}  // namespace ovc
