#pragma once

#include "ovc/graph.hpp"

#include <string>
#include <vector>

namespace ovc {

enum class ColorTarget { vertex, edge };

/// Proper coloring of the vertices or edges of a base graph. assignment is
/// indexed by vertex id (target == vertex) or edge index (target == edge)
/// and holds colors 0..k-1, each used at least once.
struct Coloring {
    ColorTarget target = ColorTarget::vertex;
    int k = 0;
    std::vector<int> assignment;
};

/// Independent properness check, used to re-validate every certificate:
/// returns an empty string when c is proper on g, otherwise a description
/// of the first violation found.
std::string properness_violation(const Graph& g, const Coloring& c);

bool is_proper(const Graph& g, const Coloring& c);

}  // namespace ovc
