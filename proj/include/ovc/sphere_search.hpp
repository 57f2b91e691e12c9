#pragma once

#include "ovc/graph.hpp"
#include "ovc/ortho.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <vector>

namespace ovc {

/// Point on the product of unit spheres: one unit d-vector per vertex.
struct SphereAssignment {
    int d = 0;
    std::vector<Eigen::VectorXd> x;
};

struct SolveConfig {
    int d = 3;
    int restarts = 100;
    int max_iterations = 10'000;
    double tolerance = 1e-9;        // success threshold on max |<x_u, x_v>|
    double grad_tolerance = 1e-12;  // restart stops below this tangent norm
    double armijo_slope = 1e-4;
    double initial_step = 1.0;
    double step_shrink = 0.5;
    std::uint64_t seed = 1;
    bool record_loss_history = false;
};

enum class SolveStatus { success, exhausted };

/// Numeric search outcome. A success is evidence that an orthogonal
/// d-coloring exists, never a proof; only round_to_rational (or an exact
/// lift) upgrades it to a certificate.
struct SolveReport {
    SolveStatus status = SolveStatus::exhausted;
    int d = 0;
    double best_residual = 1.0;
    int best_restart = -1;
    SphereAssignment best;
    std::vector<double> per_restart_losses;     // final loss, restart order
    std::vector<double> per_restart_residuals;  // final residual, restart order
    std::vector<std::vector<double>> loss_history;  // per restart, if recorded
    std::uint64_t seed = 0;
    int restarts_run = 0;
    ColorTarget target = ColorTarget::vertex;
    std::vector<EdgeId> index_edges;  // edge-target runs: index -> base edge
};

/// Sum over edges uv of <x_u, x_v>^2: zero exactly at an orthogonal
/// d-coloring.
double loss(const SphereAssignment& a, const Graph& g);

std::vector<Eigen::VectorXd> euclidean_gradient(const SphereAssignment& a,
                                                const Graph& g);

/// Euclidean gradient projected onto the tangent space of each unit sphere
/// (radial component removed).
std::vector<Eigen::VectorXd> gradient(const SphereAssignment& a, const Graph& g);

/// Multi-restart projected gradient descent with Armijo backtracking.
/// Deterministic: restart r draws from a stream derived from (seed, r), so
/// identical (graph, config) reproduce the report bit for bit.
SolveReport search_ortho_coloring(const Graph& g, const SolveConfig& cfg);

/// Edge version: runs on the line graph; report indices are edge indices
/// of g. Requires at least one edge.
SolveReport search_ortho_edge_coloring(const Graph& g, const SolveConfig& cfg);

struct RoundingResult {
    bool attempted = false;
    bool certified = false;
    long max_denominator = 0;
    long denominator_cap = 0;               // cap at which rounding certified
    std::optional<OrthoColoring> coloring;  // exact certificate on success
    std::vector<OrthoViolation> failures;   // failing pairs at the final cap
};

/// Continued-fraction rounding of every coordinate, smallest denominator
/// cap first, each attempt checked by exact rational verification. Only a
/// rounding that verifies exactly is returned as a certificate; failure to
/// certify is an outcome, not an error.
RoundingResult round_to_rational(const SphereAssignment& a, const Graph& g,
                                 long max_denominator = 1'000'000);

}  // namespace ovc
