#include "ovc/report_json.hpp"

#include "ovc/rational.hpp"

namespace ovc {

using nlohmann::json;

namespace {

const char* target_name(ColorTarget t) {
    return t == ColorTarget::vertex ? "vertex" : "edge";
}

const char* bound_kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::clique: return "clique";
        case BoundKind::search_exhausted: return "search-exhausted";
        case BoundKind::max_degree: return "max-degree";
        case BoundKind::regular_parity: return "regular-parity";
        case BoundKind::hint: return "hint";
    }
    return "unknown";
}

json rational_vectors_json(const std::vector<RationalVector>& vecs) {
    json arr = json::array();
    for (const auto& v : vecs) {
        json row = json::array();
        for (const auto& c : v.coords) row.push_back(format_rational(c));
        arr.push_back(std::move(row));
    }
    return arr;
}

}  // namespace

json coloring_json(const Coloring& c) {
    return json{{"target", target_name(c.target)},
                {"k", c.k},
                {"assignment", c.assignment}};
}

json chroma_json(const ChromaResult& r) {
    json j{{"status", r.status == ChromaStatus::exact ? "exact" : "inconclusive"},
           {"lower", r.lower},
           {"upper", r.upper},
           {"certificate", coloring_json(r.certificate)},
           {"witness", {{"kind", bound_kind_name(r.witness.kind)},
                        {"value", r.witness.value}}},
           {"nodes", r.nodes}};
    if (r.status == ChromaStatus::exact) j["value"] = r.value;
    if (r.witness.kind == BoundKind::clique) j["witness"]["clique"] = r.witness.clique;
    return j;
}

json ks_decision_json(const KSDecision& d) {
    json j{{"outcome", d.outcome == KSOutcome::ks ? "ks" : "not-ks"},
           {"bases", d.bases.size()},
           {"nodes", d.nodes}};
    if (d.outcome == KSOutcome::not_ks) j["witness"] = d.witness;
    return j;
}

json rounding_json(const RoundingResult& r) {
    json j{{"attempted", r.attempted},
           {"certified", r.certified},
           {"max_denominator", r.max_denominator}};
    if (r.certified) {
        j["denominator_cap"] = r.denominator_cap;
        if (r.coloring && r.coloring->exact())
            j["vectors"] = rational_vectors_json(std::get<0>(r.coloring->assignment));
    } else if (!r.failures.empty()) {
        json fails = json::array();
        for (const auto& f : r.failures)
            fails.push_back({{"a", f.a}, {"b", f.b}, {"residual", f.residual}});
        j["failures"] = fails;
    }
    return j;
}

json solve_report_json(const SolveReport& r, const RoundingResult* rounding) {
    json assignment = json::array();
    for (const auto& x : r.best.x) {
        json row = json::array();
        for (int i = 0; i < x.size(); ++i) row.push_back(x[i]);
        assignment.push_back(std::move(row));
    }
    json j{{"status", r.status == SolveStatus::success ? "success" : "exhausted"},
           {"d", r.d},
           {"residual", r.best_residual},
           {"restarts", r.restarts_run},
           {"seed", r.seed},
           {"target", target_name(r.target)},
           {"best_restart", r.best_restart},
           {"assignment", std::move(assignment)},
           {"per_restart_losses", r.per_restart_losses},
           {"per_restart_residuals", r.per_restart_residuals}};
    j["rounding"] = rounding ? rounding_json(*rounding)
                             : json{{"attempted", false},
                                    {"certified", false},
                                    {"max_denominator", 0}};
    return j;
}

}  // namespace ovc
