#pragma once

#include "ovc/coloring.hpp"
#include "ovc/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ovc {

struct CliqueResult {
    std::vector<int> vertices;
    bool exact = true;  // false when the node budget ran out; vertices is
                        // then the best clique found (still a lower bound)
    std::uint64_t nodes = 0;
};

/// Maximum clique by branch and bound, deterministic.
CliqueResult max_clique(const Graph& g, std::uint64_t node_budget = 50'000'000);

/// What proves the returned value cannot be beaten.
enum class BoundKind {
    clique,            // a clique of exactly `value` vertices
    search_exhausted,  // branch and bound exhausted value-1 colors
    max_degree,        // edges at a max-degree vertex are pairwise adjacent
    regular_parity,    // k-regular, odd order: color classes would be
                       // perfect matchings
    hint,              // caller-supplied lower bound was load-bearing
};

struct LowerBoundWitness {
    BoundKind kind = BoundKind::search_exhausted;
    int value = 0;
    std::vector<int> clique;  // filled for BoundKind::clique
};

enum class ChromaStatus { exact, inconclusive };

struct ChromaResult {
    ChromaStatus status = ChromaStatus::exact;
    int value = 0;             // meaningful when status == exact
    int lower = 0, upper = 0;  // proven interval; lower == upper when exact
    Coloring certificate;      // proper coloring achieving `upper`
    LowerBoundWitness witness;
    std::uint64_t nodes = 0;
};

/// Exact chromatic number by DSATUR branch and bound with a clique lower
/// bound. Hints, when given, must satisfy lower <= chi <= upper. A spent
/// node budget yields an inconclusive result carrying the proven interval,
/// never an unproven exact value.
ChromaResult chromatic_number(const Graph& g,
                              std::optional<int> lower_hint = std::nullopt,
                              std::optional<int> upper_hint = std::nullopt,
                              std::uint64_t node_budget = 50'000'000);

/// Exact chromatic index, computed as the chromatic number of the line
/// graph seeded with the Vizing bounds Delta <= chi' <= Delta+1; the
/// certificate is an edge coloring of g. Requires at least one edge.
ChromaResult chromatic_index(const Graph& g, std::uint64_t node_budget = 50'000'000);

/// Tait's construction: given a cubic graph and a Hamiltonian cycle,
/// alternate colors 0/1 along the cycle and give the leftover perfect
/// matching color 2. Throws std::invalid_argument naming the violated
/// precondition (non-cubic, odd order, invalid cycle).
Coloring tait_3_edge_coloring(const Graph& g, const std::vector<int>& cycle);

}  // namespace ovc
