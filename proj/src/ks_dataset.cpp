#include "ovc/ks_dataset.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace ovc {

namespace {

// Table data: 18 vectors over {-1,0,1} in R^4 and the nine bases, each
// basis listed in column order. Vector indices follow first appearance.
constexpr int kCoords[18][4] = {
    {0, 0, 0, 1},    // 0
    {0, 0, 1, 0},    // 1
    {1, 1, 0, 0},    // 2
    {1, -1, 0, 0},   // 3
    {0, 1, 0, 0},    // 4
    {1, 0, 1, 0},    // 5
    {1, 0, -1, 0},   // 6
    {1, -1, 1, -1},  // 7
    {1, -1, -1, 1},  // 8
    {0, 0, 1, 1},    // 9
    {1, 1, 1, 1},    // 10
    {0, 1, 0, -1},   // 11
    {1, 0, 0, 1},    // 12
    {1, 0, 0, -1},   // 13
    {0, 1, -1, 0},   // 14
    {1, 1, -1, 1},   // 15
    {1, 1, 1, -1},   // 16
    {-1, 1, 1, 1},   // 17
};

constexpr int kBases[9][4] = {
    {0, 1, 2, 3},    // B1
    {0, 4, 5, 6},    // B2
    {7, 8, 2, 9},    // B3
    {7, 10, 6, 11},  // B4
    {1, 4, 12, 13},  // B5
    {8, 10, 13, 14}, // B6
    {15, 16, 3, 9},  // B7
    {15, 17, 5, 11}, // B8
    {16, 17, 12, 14} // B9
};

std::string basis_name(int b) { return "B" + std::to_string(b + 1); }

}  // namespace

KSDataset make_dataset(VectorSet vectors, std::vector<std::array<int, 4>> bases) {
    if (vectors.size() != 18)
        throw std::runtime_error("dataset must contain exactly 18 vectors, got " +
                                 std::to_string(vectors.size()));
    if (vectors.dimension() != 4)
        throw std::runtime_error("dataset vectors must live in R^4");
    if (bases.size() != 9)
        throw std::runtime_error("dataset must list exactly 9 bases, got " +
                                 std::to_string(bases.size()));

    std::vector<std::vector<int>> holders(vectors.size());
    for (std::size_t b = 0; b < bases.size(); ++b) {
        for (int v : bases[b])
            if (v < 0 || v >= vectors.size())
                throw std::runtime_error(basis_name(static_cast<int>(b)) +
                                         " refers to vector " + std::to_string(v) +
                                         " out of range");
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                const int u = bases[b][i], v = bases[b][j];
                if (u == v)
                    throw std::runtime_error(basis_name(static_cast<int>(b)) +
                                             " repeats vector " + std::to_string(u));
                if (dot(vectors[u], vectors[v]) != 0)
                    throw std::runtime_error(
                        basis_name(static_cast<int>(b)) + " is not orthogonal: vectors " +
                        std::to_string(u) + " and " + std::to_string(v));
            }
        for (int v : bases[b]) holders[v].push_back(static_cast<int>(b));
    }
    std::vector<std::array<int, 2>> vector_bases;
    for (std::size_t v = 0; v < holders.size(); ++v) {
        if (holders[v].size() != 2)
            throw std::runtime_error("vector " + std::to_string(v) + " appears in " +
                                     std::to_string(holders[v].size()) +
                                     " bases, expected exactly 2");
        vector_bases.push_back({holders[v][0], holders[v][1]});
    }
    for (std::size_t a = 0; a < bases.size(); ++a)
        for (std::size_t b = a + 1; b < bases.size(); ++b) {
            int shared = 0;
            for (int u : bases[a])
                if (std::find(bases[b].begin(), bases[b].end(), u) != bases[b].end())
                    ++shared;
            if (shared >= 2)
                throw std::runtime_error(basis_name(static_cast<int>(a)) + " and " +
                                         basis_name(static_cast<int>(b)) + " share " +
                                         std::to_string(shared) +
                                         " vectors; the bases graph would not be simple");
        }

    KSDataset ds{std::move(vectors), std::move(bases), std::move(vector_bases)};

    // The induced bases graph must come out 4-regular on 9 vertices with 18
    // edges; bases_graph re-derives it, so check through it.
    BasesGraph bg = bases_graph(ds);
    if (bg.graph.vertex_count() != 9 || bg.graph.edge_count() != 18)
        throw std::runtime_error("bases graph is not 9 vertices / 18 edges");
    for (int v = 0; v < bg.graph.vertex_count(); ++v)
        if (bg.graph.degree(v) != 4)
            throw std::runtime_error("bases graph vertex " + basis_name(v) +
                                     " has degree " + std::to_string(bg.graph.degree(v)) +
                                     ", expected 4");
    return ds;
}

const KSDataset& load_dataset() {
    static const KSDataset ds = [] {
        std::vector<RationalVector> vecs;
        vecs.reserve(18);
        for (const auto& row : kCoords) {
            RationalVector v;
            for (int c : row) v.coords.emplace_back(c);
            vecs.push_back(std::move(v));
        }
        std::vector<std::array<int, 4>> bases;
        for (const auto& row : kBases)
            bases.push_back({row[0], row[1], row[2], row[3]});
        return make_dataset(VectorSet(std::move(vecs)), std::move(bases));
    }();
    return ds;
}

BasesGraph bases_graph(const KSDataset& ds) {
    std::map<std::pair<int, int>, int> label;
    for (std::size_t v = 0; v < ds.vector_bases.size(); ++v) {
        auto [a, b] = ds.vector_bases[v];
        const auto key = std::minmax(a, b);
        if (label.count({key.first, key.second}))
            throw std::runtime_error("bases " + basis_name(key.first) + " and " +
                                     basis_name(key.second) +
                                     " share two vectors; edge label ambiguous");
        label[{key.first, key.second}] = static_cast<int>(v);
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(label.size());
    for (const auto& [e, v] : label) edges.push_back(e);
    Graph g(static_cast<int>(ds.bases.size()), edges);

    BasesGraph out{std::move(g), {}};
    out.edge_vector.resize(out.graph.edge_count());
    for (const auto& [e, v] : label)
        out.edge_vector[out.graph.edge_index(e.first, e.second)] = v;
    return out;
}

OrthoColoring shared_vector_edge_coloring(const KSDataset& ds) {
    BasesGraph bg = bases_graph(ds);
    std::vector<RationalVector> vecs;
    vecs.reserve(bg.edge_vector.size());
    for (int v : bg.edge_vector) vecs.push_back(ds.vectors[v]);
    return OrthoColoring{ColorTarget::edge, ds.vectors.dimension(), std::move(vecs)};
}

}  // namespace ovc
