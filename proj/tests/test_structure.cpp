#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ovc/families.hpp"
#include "ovc/structure.hpp"
#include "test_util.hpp"

#include <random>
#include <set>
#include <stdexcept>

using namespace ovc;

namespace {

bool partition_is_valid(const Graph& g, const Bipartition& p) {
    std::vector<int> side(g.vertex_count(), -1);
    for (int s = 0; s < 2; ++s)
        for (int v : p.sides[s]) {
            if (side[v] != -1) return false;
            side[v] = s;
        }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (side[v] == -1) return false;
    for (const auto& e : g.edges())
        if (side[e.u] == side[e.v]) return false;
    return true;
}

bool odd_cycle_is_valid(const Graph& g, const std::vector<int>& cycle) {
    if (cycle.size() < 3 || cycle.size() % 2 == 0) return false;
    std::set<int> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != cycle.size()) return false;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
    return true;
}

}  // namespace

TEST_CASE("bipartiteness examples") {
    auto c6 = is_bipartite(cycle_graph(6));
    REQUIRE(c6.has_value());
    CHECK(partition_is_valid(cycle_graph(6), *c6));

    CHECK_FALSE(is_bipartite(cycle_graph(5)).has_value());
    CHECK_FALSE(is_bipartite(petersen_graph()).has_value());

    auto cyc = find_odd_cycle(petersen_graph());
    REQUIRE(cyc.has_value());
    CHECK(odd_cycle_is_valid(petersen_graph(), *cyc));
}

TEST_CASE("bipartiteness and odd cycles are two-sided certificates") {
    std::mt19937 rng(42);
    int bipartite_seen = 0, odd_seen = 0;
    for (int t = 0; t < 60; ++t) {
        Graph g = testutil::random_graph(8, 0.15 + 0.1 * (t % 5), rng);
        auto part = is_bipartite(g);
        auto cyc = find_odd_cycle(g);
        CHECK(part.has_value() != cyc.has_value());
        if (part) {
            ++bipartite_seen;
            CHECK(partition_is_valid(g, *part));
        } else {
            ++odd_seen;
            CHECK(odd_cycle_is_valid(g, *cyc));
        }
    }
    CHECK(bipartite_seen > 0);
    CHECK(odd_seen > 0);
}

TEST_CASE("hamiltonian cycle search") {
    auto k4 = hamiltonian_cycle(complete_graph(4));
    REQUIRE(k4.status == SearchStatus::found);
    CHECK(testutil::validates_as_hamiltonian_cycle(complete_graph(4), k4.cycle));

    auto c6 = hamiltonian_cycle(cycle_graph(6));
    REQUIRE(c6.status == SearchStatus::found);
    CHECK(testutil::validates_as_hamiltonian_cycle(cycle_graph(6), c6.cycle));

    // The first snark: exhaustive search proves there is no cycle.
    auto pet = hamiltonian_cycle(petersen_graph());
    CHECK(pet.status == SearchStatus::exhausted);
    CHECK(pet.cycle.empty());

    for (const Graph& g : {prism_graph(3), complete_bipartite(3, 3),
                           hypercube_graph(3), moebius_ladder(4)}) {
        auto r = hamiltonian_cycle(g);
        REQUIRE(r.status == SearchStatus::found);
        CHECK(testutil::validates_as_hamiltonian_cycle(g, r.cycle));
    }

    CHECK_THROWS_AS(hamiltonian_cycle(complete_graph(2)), std::invalid_argument);
}

TEST_CASE("hamiltonian search reports a spent budget, never a silent no") {
    auto r = hamiltonian_cycle(petersen_graph(), 10);
    CHECK(r.status == SearchStatus::budget_exceeded);
    CHECK(r.cycle.empty());
}

TEST_CASE("planarity on known answers") {
    CHECK(is_planar(complete_graph(4)));
    CHECK_FALSE(is_planar(complete_graph(5)));
    CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
    CHECK_FALSE(is_planar(petersen_graph()));
    CHECK(is_planar(cycle_graph(6)));
    CHECK(is_planar(prism_graph(4)));
    CHECK(is_planar(Graph(0)));
}

TEST_CASE("planarity respects the Euler edge bound") {
    std::mt19937 rng(99);
    for (int t = 0; t < 40; ++t) {
        Graph g = testutil::random_graph(9, 0.2 + 0.15 * (t % 4), rng);
        if (is_planar(g) && g.vertex_count() >= 3)
            CHECK(g.edge_count() <= 3 * g.vertex_count() - 6);
    }
}

TEST_CASE("biconnectivity") {
    CHECK(is_biconnected(cycle_graph(5)));
    CHECK_FALSE(is_biconnected(path_graph(3)));  // middle vertex cuts
    CHECK(is_biconnected(petersen_graph()));
    CHECK_FALSE(is_biconnected(Graph(4, {{0, 1}, {2, 3}})));  // disconnected
    CHECK_FALSE(is_biconnected(complete_graph(2)));           // n < 3
    Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    CHECK_FALSE(is_biconnected(bowtie));
}

TEST_CASE("perfect matchings") {
    CHECK_FALSE(has_perfect_matching(cycle_graph(5)).has_value());
    CHECK_FALSE(has_perfect_matching(path_graph(3)).has_value());

    auto k4 = has_perfect_matching(complete_graph(4));
    REQUIRE(k4.has_value());
    CHECK(k4->size() == 2);

    auto pet = has_perfect_matching(petersen_graph());
    REQUIRE(pet.has_value());
    CHECK(pet->size() == 5);
    std::set<int> covered;
    for (const auto& e : *pet) {
        CHECK(petersen_graph().has_edge(e.u, e.v));
        covered.insert(e.u);
        covered.insert(e.v);
    }
    CHECK(covered.size() == 10);

    // Even order alone is not enough: two leaves fight over the center.
    CHECK_FALSE(has_perfect_matching(star_graph(3)).has_value());
    CHECK(has_perfect_matching(Graph(0)).has_value());
}

TEST_CASE("odd order never has a perfect matching") {
    std::mt19937 rng(17);
    for (int t = 0; t < 25; ++t) {
        Graph g = testutil::random_graph(7, 0.6, rng);
        CHECK_FALSE(has_perfect_matching(g).has_value());
    }
}
