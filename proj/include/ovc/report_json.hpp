#pragma once

#include "ovc/chroma.hpp"
#include "ovc/ortho.hpp"
#include "ovc/sphere_search.hpp"

#include <json.hpp>

namespace ovc {

// JSON renderings with frozen field names; the CLI and the test suite both
// go through these.

/// {"target": "vertex"|"edge", "k": int, "assignment": [int]}
nlohmann::json coloring_json(const Coloring& c);

nlohmann::json chroma_json(const ChromaResult& r);

/// {"outcome": "ks"|"not-ks", "witness"?, "bases": int, "nodes": int}
nlohmann::json ks_decision_json(const KSDecision& d);

/// {"status", "d", "residual", "restarts", "seed", "assignment"?,
///  "rounding": {"attempted", "certified", "max_denominator"},
///  "per_restart_losses"}
nlohmann::json solve_report_json(const SolveReport& r,
                                 const RoundingResult* rounding = nullptr);

nlohmann::json rounding_json(const RoundingResult& r);

}  // namespace ovc
