#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ovc/families.hpp"
#include "ovc/graph.hpp"
#include "test_util.hpp"

#include <random>
#include <stdexcept>

using namespace ovc;

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{-1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
}

TEST_CASE("edges are normalized, sorted and stably indexed") {
    Graph g(4, {{2, 1}, {0, 3}, {0, 1}});
    REQUIRE(g.edge_count() == 3);
    CHECK(g.edges()[0] == EdgeId{0, 1});
    CHECK(g.edges()[1] == EdgeId{0, 3});
    CHECK(g.edges()[2] == EdgeId{1, 2});
    CHECK(g.edge_index(3, 0) == 1);
    CHECK(g.edge_index(1, 3) == -1);
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK(g.incident_edges(0) == std::vector<int>{0, 1});
}

TEST_CASE("join examples") {
    CHECK(join(complete_graph(1), complete_graph(1)) == complete_graph(2));
    CHECK(join(complete_graph(2), complete_graph(2)) == complete_graph(4));
    // Wheel W5: C5 join K1.
    Graph w5 = join(cycle_graph(5), complete_graph(1));
    CHECK(w5.vertex_count() == 6);
    CHECK(w5.edge_count() == 10);
}

TEST_CASE("join edge count law on random pairs") {
    std::mt19937 rng(20240811);
    for (int t = 0; t < 30; ++t) {
        Graph a = testutil::random_graph(2 + t % 6, 0.4, rng);
        Graph b = testutil::random_graph(2 + (t * 7) % 5, 0.5, rng);
        Graph j = join(a, b);
        CHECK(j.edge_count() == a.edge_count() + b.edge_count() +
                                    a.vertex_count() * b.vertex_count());
        CHECK(j.vertex_count() == a.vertex_count() + b.vertex_count());
    }
}

TEST_CASE("line graph examples against the definition") {
    // Two edges meeting in the middle of a path become K2.
    CHECK(line_graph(path_graph(3)).graph == complete_graph(2));
    CHECK(line_graph(star_graph(3)).graph == complete_graph(3));

    Graph lc5 = line_graph(cycle_graph(5)).graph;
    CHECK(lc5 == testutil::brute_line_graph(cycle_graph(5)));
    CHECK(degree_profile(lc5).regular);
    CHECK(degree_profile(lc5).max_degree == 2);
    CHECK(lc5.vertex_count() == 5);
}

TEST_CASE("line graph matches brute force on random graphs") {
    std::mt19937 rng(7);
    for (int t = 0; t < 25; ++t) {
        Graph g = testutil::random_graph(3 + t % 7, 0.5, rng);
        LineGraph lg = line_graph(g);
        CHECK(lg.graph == testutil::brute_line_graph(g));
        CHECK(lg.vertex_edges == g.edges());
        // Degree law: deg_L((u,v)) = deg(u) + deg(v) - 2.
        for (int e = 0; e < g.edge_count(); ++e) {
            const EdgeId id = g.edges()[e];
            CHECK(lg.graph.degree(e) == g.degree(id.u) + g.degree(id.v) - 2);
        }
    }
}

TEST_CASE("degree profile examples") {
    DegreeProfile c7 = degree_profile(cycle_graph(7));
    CHECK(c7.max_degree == 2);
    CHECK(c7.regular);
    CHECK(c7.sequence == std::vector<int>(7, 2));

    DegreeProfile star = degree_profile(star_graph(3));
    CHECK(star.max_degree == 3);
    CHECK_FALSE(star.regular);
    CHECK(star.sequence == std::vector<int>{3, 1, 1, 1});

    CHECK(degree_profile(Graph(0)).regular);
    CHECK(degree_profile(Graph(0)).max_degree == 0);
}

TEST_CASE("named families have the expected shape") {
    CHECK(petersen_graph().vertex_count() == 10);
    CHECK(degree_profile(petersen_graph()).regular);
    CHECK(degree_profile(petersen_graph()).max_degree == 3);
    CHECK(degree_profile(prism_graph(3)).max_degree == 3);
    CHECK(degree_profile(moebius_ladder(4)).regular);
    CHECK(degree_profile(hypercube_graph(3)).max_degree == 3);
    CHECK(complete_bipartite(3, 3).edge_count() == 9);
}
