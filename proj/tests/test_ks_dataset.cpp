#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ovc/chroma.hpp"
#include "ovc/graph6.hpp"
#include "ovc/ks_dataset.hpp"
#include "ovc/structure.hpp"

#include <algorithm>
#include <set>
#include <sstream>

using namespace ovc;

namespace {

RationalVector rv4(int a, int b, int c, int d) {
    RationalVector v;
    v.coords = {Rat(a), Rat(b), Rat(c), Rat(d)};
    return v;
}

}  // namespace

TEST_CASE("dataset loads and matches the published first basis") {
    const auto& ds = load_dataset();
    REQUIRE(ds.vectors.size() == 18);
    REQUIRE(ds.bases.size() == 9);
    CHECK(ds.vectors.dimension() == 4);

    CHECK(ds.vectors[ds.bases[0][0]] == rv4(0, 0, 0, 1));
    CHECK(ds.vectors[ds.bases[0][1]] == rv4(0, 0, 1, 0));
    CHECK(ds.vectors[ds.bases[0][2]] == rv4(1, 1, 0, 0));
    CHECK(ds.vectors[ds.bases[0][3]] == rv4(1, -1, 0, 0));
}

TEST_CASE("every basis has a diagonal Gram matrix") {
    const auto& ds = load_dataset();
    for (const auto& basis : ds.bases)
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                CHECK(dot(ds.vectors[basis[i]], ds.vectors[basis[j]]) == 0);
}

TEST_CASE("every vector appears in exactly two bases") {
    const auto& ds = load_dataset();
    REQUIRE(ds.vector_bases.size() == 18);
    std::vector<int> counts(18, 0);
    for (const auto& basis : ds.bases)
        for (int v : basis) ++counts[v];
    for (int c : counts) CHECK(c == 2);
    for (std::size_t v = 0; v < ds.vector_bases.size(); ++v) {
        const auto [a, b] = ds.vector_bases[v];
        CHECK(a < b);
        CHECK(std::count(ds.bases[a].begin(), ds.bases[a].end(), static_cast<int>(v)) == 1);
        CHECK(std::count(ds.bases[b].begin(), ds.bases[b].end(), static_cast<int>(v)) == 1);
    }
}

TEST_CASE("bases graph is the 4-regular 9-vertex graph with 18 edges") {
    const auto& ds = load_dataset();
    BasesGraph bg = bases_graph(ds);
    CHECK(bg.graph.vertex_count() == 9);
    CHECK(bg.graph.edge_count() == 18);
    for (int v = 0; v < 9; ++v) CHECK(bg.graph.degree(v) == 4);

    // B1 and B2 are adjacent: they share (0,0,0,1).
    REQUIRE(bg.graph.has_edge(0, 1));
    const int shared = bg.edge_vector[bg.graph.edge_index(0, 1)];
    CHECK(ds.vectors[shared] == rv4(0, 0, 0, 1));
}

TEST_CASE("incident edge labels at a vertex are exactly that basis") {
    const auto& ds = load_dataset();
    BasesGraph bg = bases_graph(ds);
    for (int b = 0; b < 9; ++b) {
        std::set<int> labels;
        for (int e : bg.graph.incident_edges(b)) labels.insert(bg.edge_vector[e]);
        std::set<int> expected(ds.bases[b].begin(), ds.bases[b].end());
        CHECK(labels == expected);
    }
}

TEST_CASE("shared-vector coloring is an exact orthogonal 4-edge-coloring") {
    const auto& ds = load_dataset();
    BasesGraph bg = bases_graph(ds);
    OrthoColoring f = shared_vector_edge_coloring(ds);
    CHECK(f.target == ColorTarget::edge);
    CHECK(f.d == 4);
    CHECK(f.size() == 18);
    CHECK(verify_ortho_coloring(bg.graph, f).pass);
}

TEST_CASE("the strict gap: chi' = 5 while the vectors certify pi' = 4") {
    const auto& ds = load_dataset();
    BasesGraph bg = bases_graph(ds);

    ChromaResult ci = chromatic_index(bg.graph);
    REQUIRE(ci.status == ChromaStatus::exact);
    CHECK(ci.value == 5);
    CHECK(is_proper(bg.graph, ci.certificate));
    CHECK(ci.witness.kind == BoundKind::regular_parity);

    CHECK(degree_profile(bg.graph).max_degree == 4);
    CHECK(verify_ortho_coloring(bg.graph, shared_vector_edge_coloring(ds)).pass);

    // The parity argument needs the odd order to actually bite.
    CHECK_FALSE(has_perfect_matching(bg.graph).has_value());
}

TEST_CASE("dataset exports through the standard formats") {
    const auto& ds = load_dataset();
    std::vector<std::vector<int>> bases;
    for (const auto& b : ds.bases) bases.push_back({b[0], b[1], b[2], b[3]});
    std::stringstream buf;
    write_vectorset(buf, ds.vectors, bases);
    VectorSetFile file = read_vectorset(buf);
    std::vector<std::array<int, 4>> parsed;
    for (const auto& b : file.bases) {
        REQUIRE(b.size() == 4);
        parsed.push_back({b[0], b[1], b[2], b[3]});
    }
    KSDataset rebuilt = make_dataset(std::move(file.vectors), std::move(parsed));
    CHECK(rebuilt.vectors.vectors() == ds.vectors.vectors());

    BasesGraph bg = bases_graph(ds);
    CHECK(from_graph6(to_graph6(bg.graph)) == bg.graph);
}

TEST_CASE("validation rejects tampered data by name") {
    const auto& ds = load_dataset();
    auto vectors = ds.vectors.vectors();
    auto bases = ds.bases;

    // Break orthogonality inside B1.
    auto broken = vectors;
    broken[0].coords[1] = 1;  // (0,0,0,1) -> (0,1,0,1), not orthogonal to (1,1,0,0)
    CHECK_THROWS_WITH_AS(make_dataset(VectorSet(broken), bases),
                         doctest::Contains("B1"), std::runtime_error);

    // Break the exactly-twice multiplicity.
    auto rebased = bases;
    rebased[0][0] = rebased[0][1];
    CHECK_THROWS_AS(make_dataset(VectorSet(vectors), rebased), std::runtime_error);

    // Wrong cardinality.
    auto fewer = vectors;
    fewer.pop_back();
    CHECK_THROWS_WITH_AS(make_dataset(VectorSet(fewer), bases),
                         doctest::Contains("18"), std::runtime_error);
}
