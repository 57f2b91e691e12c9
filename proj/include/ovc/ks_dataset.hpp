#pragma once

#include "ovc/graph.hpp"
#include "ovc/ortho.hpp"
#include "ovc/vectorset.hpp"

#include <array>
#include <vector>

namespace ovc {

/// The 18-vector Kochen-Specker set in R^4 together with its nine
/// orthonormal bases; every vector lies in exactly two bases.
///
/// Transcription note: one widely-circulated rendering of this table swaps
/// the fourth entries of B5 and B6 (making B5 non-orthogonal and repeating
/// a vector inside B6). The embedded data uses the original 18-vector set;
/// load_dataset() re-validates every structural invariant at load time
/// rather than trusting any transcription.
struct KSDataset {
    VectorSet vectors;
    std::vector<std::array<int, 4>> bases;
    /// vector index -> the exactly-two bases containing it, ascending.
    std::vector<std::array<int, 2>> vector_bases;
};

/// The embedded dataset, validated once on first use. Throws
/// std::runtime_error naming the failing basis/vector if an invariant is
/// ever violated.
const KSDataset& load_dataset();

/// Validates an arbitrary candidate (e.g. a file override) against the full
/// invariant list: 18 distinct vectors in R^4, 9 pairwise-orthogonal bases,
/// every vector in exactly two bases, no two bases sharing two vectors,
/// induced bases graph 4-regular with 18 edges. Throws on violation.
KSDataset make_dataset(VectorSet vectors, std::vector<std::array<int, 4>> bases);

struct BasesGraph {
    Graph graph;                   // one vertex per basis
    std::vector<int> edge_vector;  // edge index -> shared vector index
};

/// G(S): bases as vertices, one edge per shared vector, labeled by it.
BasesGraph bases_graph(const KSDataset& ds);

/// Labels every edge of G(S) with its shared vector: an exact orthogonal
/// 4-edge-coloring (edges at a vertex carry that basis's four vectors).
OrthoColoring shared_vector_edge_coloring(const KSDataset& ds);

}  // namespace ovc
