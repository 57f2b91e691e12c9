#pragma once

#include "ovc/chroma.hpp"
#include "ovc/coloring.hpp"
#include "ovc/graph.hpp"
#include "ovc/vectorset.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <variant>
#include <vector>

namespace ovc {

/// Assignment of one vector per vertex (or per edge) of a base graph;
/// exact rational for certificates, float for numeric-search output.
struct OrthoColoring {
    ColorTarget target = ColorTarget::vertex;
    int d = 0;
    std::variant<std::vector<RationalVector>, std::vector<Eigen::VectorXd>>
        assignment;

    bool exact() const { return assignment.index() == 0; }
    int size() const;
};

/// K(S): one vertex per vector, edges exactly between orthogonal pairs
/// (exact rational dot product zero).
Graph orthogonality_graph(const VectorSet& s);

struct OrthobasisList {
    /// Ascending index quadruples (d-tuples), lexicographically sorted.
    std::vector<std::vector<int>> bases;
    /// Number of size-d subsets examined: C(|s|, d).
    std::uint64_t subsets_scanned = 0;
};

/// Every size-d subset of s that is pairwise orthogonal; after scaling
/// these are exactly the orthonormal bases inside s.
OrthobasisList enumerate_orthobases(const VectorSet& s);

enum class KSOutcome { ks, not_ks };

struct KSDecision {
    KSOutcome outcome = KSOutcome::not_ks;
    std::vector<int> witness;             // {0,1} marking, present iff not_ks
    std::vector<std::vector<int>> bases;  // bases quantified over
    std::uint64_t nodes = 0;              // branch decisions explored
};

/// Is s a Kochen-Specker set? Decides whether a {0,1} marking exists with
/// exactly one marked vector in every orthonormal basis inside s, by
/// backtracking with unit propagation over all enumerated bases. With no
/// bases the answer is vacuously not_ks with the all-zeros witness.
KSDecision ks_decide(const VectorSet& s);

/// Same decision restricted to an explicit basis list.
KSDecision ks_decide(const VectorSet& s, std::vector<std::vector<int>> bases);

struct OrthoViolation {
    int a = 0, b = 0;  // vertex ids or edge indices, per target
    double residual = 0.0;
};

struct VerifyReport {
    bool pass = false;
    std::vector<OrthoViolation> violations;
};

/// Exact verification: every adjacent pair (edge, or edges sharing an
/// endpoint) has dot product exactly zero. Float assignments are converted
/// exactly first. Throws std::invalid_argument on dimension mismatch, zero
/// vectors, or missing elements.
VerifyReport verify_ortho_coloring(const Graph& g, const OrthoColoring& f);

/// Tolerance verification on normalized vectors: |<u,v>| / (|u||v|) <= eps.
VerifyReport verify_ortho_coloring(const Graph& g, const OrthoColoring& f,
                                   double eps);

/// Canonical-basis lift: each element colored i receives the i-th standard
/// basis vector of R^k. Turns any proper k-coloring into an exact
/// orthogonal k-coloring (pi <= chi, constructively).
OrthoColoring coloring_to_orthogonal(const Graph& g, const Coloring& c);

struct PiBounds {
    int lower = 0, upper = 0;
    bool exact_bounds = true;  // clique and chi both ran to completion
    CliqueResult clique;       // dimension lower bound witness
    ChromaResult chi;          // upper bound source
    OrthoColoring lift;        // canonical lift of chi's certificate
};

/// Bounds for the orthogonal number: a clique needs pairwise-orthogonal
/// vectors, so lower = max clique size, raised to 3 for non-bipartite
/// graphs with an edge (an orthogonal 2-coloring forces bipartiteness);
/// upper = chi via the canonical lift.
PiBounds pi_bounds(const Graph& g, std::uint64_t node_budget = 50'000'000);

/// Zero-padding direct sum: v in g1 keeps f1(v) extended by d2 zeros, v in
/// g2 gets d1 zeros followed by f2(v). The result is an orthogonal
/// (d1+d2)-coloring of join(g1, g2).
OrthoColoring direct_sum_coloring(const Graph& g1, const OrthoColoring& f1,
                                  const Graph& g2, const OrthoColoring& f2);

}  // namespace ovc
