#pragma once

#include "ovc/graph.hpp"

namespace ovc {

// Small named graphs used throughout the test batteries and the CLI docs.

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// Star K_{1,leaves}, center at vertex 0.
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
/// Outer cycle 0..4, spokes i -- i+5, inner pentagram.
Graph petersen_graph();
/// Two n-cycles joined by a perfect matching (C_n x K_2).
Graph prism_graph(int n);
/// Cycle on 2k vertices plus the k antipodal chords; cubic.
Graph moebius_ladder(int k);
Graph hypercube_graph(int dim);

}  // namespace ovc
