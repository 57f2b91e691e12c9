#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ovc/families.hpp"
#include "ovc/graph6.hpp"
#include "test_util.hpp"

#include <random>
#include <sstream>

using namespace ovc;

// Expected bytes computed with an independent reference encoder
// (networkx.to_graph6_bytes) and frozen here.
TEST_CASE("canonical encodings match the reference encoder") {
    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(complete_graph(3)) == "Bw");
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(to_graph6(cycle_graph(5)) == "Dhc");
    CHECK(to_graph6(star_graph(3)) == "Cs");
    CHECK(to_graph6(star_graph(4)) == "Ds_");
    CHECK(to_graph6(complete_bipartite(3, 3)) == "EFz_");
    CHECK(to_graph6(prism_graph(3)) == "E{Sw");
    CHECK(to_graph6(petersen_graph()) == "IheA@GUAo");
}

TEST_CASE("decoding examples") {
    CHECK(from_graph6("@") == Graph(1));
    CHECK(from_graph6("Bw") == complete_graph(3));

    Graph p = from_graph6("IheA@GUAo");
    CHECK(p.vertex_count() == 10);
    DegreeProfile prof = degree_profile(p);
    CHECK(prof.regular);
    CHECK(prof.max_degree == 3);
    CHECK(p == petersen_graph());
}

TEST_CASE("round trip is the identity on random graphs") {
    std::mt19937 rng(123);
    for (int t = 0; t < 1000; ++t) {
        Graph g = testutil::random_graph(12, 0.3, rng);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("three-tier size header round trips") {
    std::mt19937 rng(5);
    Graph small = testutil::random_graph(62, 0.05, rng);
    Graph medium = testutil::random_graph(63, 0.05, rng);
    Graph larger = testutil::random_graph(100, 0.02, rng);
    CHECK(to_graph6(small)[0] != '~');
    CHECK(to_graph6(medium)[0] == '~');
    CHECK(from_graph6(to_graph6(small)) == small);
    CHECK(from_graph6(to_graph6(medium)) == medium);
    CHECK(from_graph6(to_graph6(larger)) == larger);
}

TEST_CASE("parse errors carry the byte offset") {
    auto offset_of = [](const std::string& rec) -> std::size_t {
        try {
            (void)from_graph6(rec);
        } catch (const Graph6Error& e) {
            return e.byte_offset();
        }
        return static_cast<std::size_t>(-1);
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of(" w") == 0);             // header below 63
    CHECK(offset_of("B\x20") == 1);          // payload byte below 63
    CHECK(offset_of("B\x7f") == 1);          // payload byte above 126
    CHECK(offset_of("B") == 1);              // truncated payload
    CHECK(offset_of("Bx") == 1);             // nonzero padding bits
    CHECK(offset_of("Bw?") == 2);            // trailing byte
    CHECK(offset_of("~B") == 2);             // truncated size header
    CHECK_THROWS_AS((void)from_graph6("Bx"), Graph6Error);
}

TEST_CASE("stream reader skips comments, blanks and the format header") {
    std::istringstream in(
        "# cubic corpus sample\n"
        "\n"
        ">>graph6<<Bw\n"
        "C~\n"
        "# trailer\n");
    auto graphs = read_graph6_stream(in);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == complete_graph(3));
    CHECK(graphs[1] == complete_graph(4));
}
