#include "ovc/ortho.hpp"

#include "ovc/structure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ovc {

int OrthoColoring::size() const {
    if (exact())
        return static_cast<int>(std::get<0>(assignment).size());
    return static_cast<int>(std::get<1>(assignment).size());
}

Graph orthogonality_graph(const VectorSet& s) {
    const int n = s.size();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dot(s[i], s[j]) == 0) edges.emplace_back(i, j);
    return Graph(n, edges);
}

OrthobasisList enumerate_orthobases(const VectorSet& s) {
    const int n = s.size();
    const int d = s.dimension();
    OrthobasisList out;
    if (d > n) return out;

    // Orthogonality matrix once, exact; subsets are then bool lookups.
    std::vector<std::vector<char>> orth(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            orth[i][j] = orth[j][i] = dot(s[i], s[j]) == 0;

    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    while (true) {
        ++out.subsets_scanned;
        bool ok = true;
        for (int a = 0; a < d && ok; ++a)
            for (int b = a + 1; b < d; ++b)
                if (!orth[idx[a]][idx[b]]) {
                    ok = false;
                    break;
                }
        if (ok) out.bases.push_back(idx);

        int pos = d - 1;
        while (pos >= 0 && idx[pos] == n - d + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

namespace {

// Exactly-one-per-basis satisfiability by backtracking with unit
// propagation: a marked vector zeroes the rest of its bases; a basis whose
// other members are all zero forces its last one.
struct KSSearch {
    int n;
    const std::vector<std::vector<int>>& bases;
    std::vector<std::vector<int>> member_of;  // vector -> basis indices
    std::vector<int> mark;                    // -1 unset, else 0/1
    std::vector<int> ones, zeros, unset;      // per-basis counters
    std::vector<int> trail;
    std::uint64_t nodes = 0;

    KSSearch(int n_vectors, const std::vector<std::vector<int>>& basis_list)
        : n(n_vectors), bases(basis_list), member_of(n_vectors),
          mark(n_vectors, -1), ones(basis_list.size(), 0),
          zeros(basis_list.size(), 0) {
        unset.reserve(bases.size());
        for (std::size_t b = 0; b < bases.size(); ++b) {
            unset.push_back(static_cast<int>(bases[b].size()));
            for (int v : bases[b]) member_of[v].push_back(static_cast<int>(b));
        }
    }

    bool assign(int v, int val) {
        if (mark[v] != -1) return mark[v] == val;
        mark[v] = val;
        trail.push_back(v);
        // Update every counter before reporting a conflict so that undo()
        // always reverses a complete update.
        bool ok = true;
        for (int b : member_of[v]) {
            --unset[b];
            (val ? ones[b] : zeros[b])++;
            if (ones[b] > 1) ok = false;
            if (ones[b] == 0 && unset[b] == 0) ok = false;
        }
        return ok;
    }

    bool propagate(std::size_t from) {
        for (std::size_t t = from; t < trail.size(); ++t) {
            const int v = trail[t];
            for (int b : member_of[v]) {
                if (ones[b] == 1 && unset[b] > 0) {
                    for (int w : bases[b])
                        if (mark[w] == -1 && !assign(w, 0)) return false;
                } else if (ones[b] == 0 && unset[b] == 1) {
                    for (int w : bases[b])
                        if (mark[w] == -1 && !assign(w, 1)) return false;
                }
            }
        }
        return true;
    }

    void undo(std::size_t to) {
        while (trail.size() > to) {
            const int v = trail.back();
            trail.pop_back();
            for (int b : member_of[v]) {
                ++unset[b];
                (mark[v] ? ones[b] : zeros[b])--;
            }
            mark[v] = -1;
        }
    }

    // Branch on the lowest-index vector in an unsatisfied basis.
    int pick() const {
        for (std::size_t b = 0; b < bases.size(); ++b)
            if (ones[b] == 0)
                for (int v : bases[b])
                    if (mark[v] == -1) return v;
        return -1;
    }

    bool solve() {
        const int v = pick();
        if (v == -1) return true;  // every basis satisfied
        for (int val : {1, 0}) {
            ++nodes;
            const std::size_t mark_point = trail.size();
            if (assign(v, val) && propagate(mark_point)) {
                if (solve()) return true;
            }
            undo(mark_point);
        }
        return false;
    }
};

}  // namespace

KSDecision ks_decide(const VectorSet& s, std::vector<std::vector<int>> bases) {
    for (const auto& b : bases)
        for (int v : b)
            if (v < 0 || v >= s.size())
                throw std::invalid_argument("basis index out of range");
    KSSearch search(s.size(), bases);
    KSDecision d;
    d.bases = bases;
    if (search.solve()) {
        d.outcome = KSOutcome::not_ks;
        d.witness.assign(s.size(), 0);
        for (int v = 0; v < s.size(); ++v)
            if (search.mark[v] == 1) d.witness[v] = 1;
    } else {
        d.outcome = KSOutcome::ks;
    }
    d.nodes = search.nodes;
    return d;
}

KSDecision ks_decide(const VectorSet& s) {
    return ks_decide(s, enumerate_orthobases(s).bases);
}

namespace {

std::vector<std::pair<int, int>> adjacent_pairs(const Graph& g, ColorTarget target) {
    std::vector<std::pair<int, int>> pairs;
    if (target == ColorTarget::vertex) {
        pairs.reserve(g.edge_count());
        for (const auto& e : g.edges()) pairs.emplace_back(e.u, e.v);
    } else {
        for (int v = 0; v < g.vertex_count(); ++v) {
            auto inc = g.incident_edges(v);
            for (std::size_t i = 0; i < inc.size(); ++i)
                for (std::size_t j = i + 1; j < inc.size(); ++j)
                    pairs.emplace_back(inc[i], inc[j]);
        }
    }
    return pairs;
}

std::vector<RationalVector> exact_view(const OrthoColoring& f) {
    if (f.exact()) return std::get<0>(f.assignment);
    std::vector<RationalVector> out;
    for (const auto& x : std::get<1>(f.assignment)) {
        RationalVector v;
        v.coords.reserve(x.size());
        for (int i = 0; i < x.size(); ++i)
            v.coords.push_back(rational_from_double(x[i]));
        out.push_back(std::move(v));
    }
    return out;
}

void check_shape(const Graph& g, const OrthoColoring& f) {
    const int count = f.target == ColorTarget::vertex ? g.vertex_count()
                                                      : g.edge_count();
    if (f.size() != count)
        throw std::invalid_argument("coloring covers " + std::to_string(f.size()) +
                                    " elements, graph has " + std::to_string(count));
}

}  // namespace

VerifyReport verify_ortho_coloring(const Graph& g, const OrthoColoring& f) {
    check_shape(g, f);
    const auto vecs = exact_view(f);
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        if (vecs[i].dim() != f.d)
            throw std::invalid_argument("element " + std::to_string(i) +
                                        " has dimension " + std::to_string(vecs[i].dim()) +
                                        ", expected " + std::to_string(f.d));
        if (vecs[i].is_zero())
            throw std::invalid_argument("element " + std::to_string(i) +
                                        " carries the zero vector");
    }
    VerifyReport report;
    report.pass = true;
    for (auto [a, b] : adjacent_pairs(g, f.target)) {
        const Rat r = dot(vecs[a], vecs[b]);
        if (r != 0) {
            report.pass = false;
            report.violations.push_back({a, b, std::abs(r.get_d())});
        }
    }
    return report;
}

VerifyReport verify_ortho_coloring(const Graph& g, const OrthoColoring& f,
                                   double eps) {
    check_shape(g, f);
    std::vector<Eigen::VectorXd> vecs;
    if (f.exact()) {
        for (const auto& v : std::get<0>(f.assignment)) {
            Eigen::VectorXd x(v.dim());
            for (int i = 0; i < v.dim(); ++i) x[i] = v.coords[i].get_d();
            vecs.push_back(std::move(x));
        }
    } else {
        vecs = std::get<1>(f.assignment);
    }
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        if (static_cast<int>(vecs[i].size()) != f.d)
            throw std::invalid_argument("element " + std::to_string(i) +
                                        " has dimension " + std::to_string(vecs[i].size()) +
                                        ", expected " + std::to_string(f.d));
        if (vecs[i].norm() == 0.0)
            throw std::invalid_argument("element " + std::to_string(i) +
                                        " carries the zero vector");
    }
    VerifyReport report;
    report.pass = true;
    for (auto [a, b] : adjacent_pairs(g, f.target)) {
        const double r =
            std::abs(vecs[a].dot(vecs[b])) / (vecs[a].norm() * vecs[b].norm());
        if (!(r <= eps)) {
            report.pass = false;
            report.violations.push_back({a, b, r});
        }
    }
    return report;
}

OrthoColoring coloring_to_orthogonal(const Graph& g, const Coloring& c) {
    if (const std::string why = properness_violation(g, c); !why.empty())
        throw std::invalid_argument("improper coloring: " + why);
    std::vector<RationalVector> vecs;
    vecs.reserve(c.assignment.size());
    for (int col : c.assignment) {
        RationalVector v;
        v.coords.assign(c.k, Rat(0));
        v.coords[col] = 1;
        vecs.push_back(std::move(v));
    }
    return OrthoColoring{c.target, c.k, std::move(vecs)};
}

PiBounds pi_bounds(const Graph& g, std::uint64_t node_budget) {
    PiBounds out;
    if (g.vertex_count() == 0) {
        out.lift = OrthoColoring{ColorTarget::vertex, 0,
                                 std::vector<RationalVector>{}};
        return out;
    }
    out.clique = max_clique(g, node_budget);
    out.chi = chromatic_number(g, std::nullopt, std::nullopt, node_budget);
    out.lower = static_cast<int>(out.clique.vertices.size());
    if (g.edge_count() > 0) {
        out.lower = std::max(out.lower, 2);
        // An orthogonal 2-coloring forces bipartiteness: each unit vector
        // of the plane has one orthogonal line.
        if (!is_bipartite(g)) out.lower = std::max(out.lower, 3);
    }
    out.upper = out.chi.certificate.k;
    out.lift = coloring_to_orthogonal(g, out.chi.certificate);
    out.exact_bounds = out.clique.exact && out.chi.status == ChromaStatus::exact;
    return out;
}

OrthoColoring direct_sum_coloring(const Graph& g1, const OrthoColoring& f1,
                                  const Graph& g2, const OrthoColoring& f2) {
    if (f1.target != ColorTarget::vertex || f2.target != ColorTarget::vertex)
        throw std::invalid_argument("direct_sum_coloring takes vertex colorings");
    if (!f1.exact() || !f2.exact())
        throw std::invalid_argument("direct_sum_coloring takes exact colorings");
    if (!verify_ortho_coloring(g1, f1).pass || !verify_ortho_coloring(g2, f2).pass)
        throw std::invalid_argument("direct_sum_coloring inputs must verify exactly");

    const auto& a = std::get<0>(f1.assignment);
    const auto& b = std::get<0>(f2.assignment);
    const int d = f1.d + f2.d;
    std::vector<RationalVector> vecs;
    vecs.reserve(a.size() + b.size());
    for (const auto& v : a) {
        RationalVector w;
        w.coords = v.coords;
        w.coords.resize(d, Rat(0));
        vecs.push_back(std::move(w));
    }
    for (const auto& v : b) {
        RationalVector w;
        w.coords.assign(f1.d, Rat(0));
        w.coords.insert(w.coords.end(), v.coords.begin(), v.coords.end());
        vecs.push_back(std::move(w));
    }
    return OrthoColoring{ColorTarget::vertex, d, std::move(vecs)};
}

}  // namespace ovc
