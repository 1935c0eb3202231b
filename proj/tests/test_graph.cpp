#include <doctest.h>

#include <stdexcept>

#include <set>

#include "gspectra/counting.hpp"
#include "gspectra/generators.hpp"
#include "gspectra/graph.hpp"
#include "gspectra/rng.hpp"

using namespace gspectra;

namespace {

Graph gen(const std::string& spec, uint64_t seed = 0) {
    return generate(parse_generator_spec(spec, seed));
}

}  // namespace

TEST_CASE("from_edge_list basics") {
    Graph k3 = from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.m() == 3);
    CHECK(k3.has_edge(0, 2));

    Graph empty = from_edge_list(2, {});
    CHECK(empty.m() == 0);

    Graph dup = from_edge_list(4, {{0, 1}, {0, 1}});
    CHECK(dup.m() == 1);

    CHECK_THROWS_AS(from_edge_list(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(from_edge_list(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("edge-list text format") {
    Graph g = parse_edge_list_text("3 2\n0 1\n1 2\n");
    CHECK(g.n() == 3);
    CHECK(g.m() == 2);
    CHECK(g.has_edge(1, 2));
    CHECK_THROWS_AS(parse_edge_list_text("3 2\n0 1\n"), std::invalid_argument);
}

TEST_CASE("graph6 decoding of hand-checked strings") {
    // 'A' encodes n=2; '_' = 95-63 = 32 = 100000b, so bit (0,1) is set
    Graph k2 = parse_graph6("A_");
    CHECK(k2.n() == 2);
    CHECK(k2.m() == 1);

    Graph e2 = parse_graph6("A?");
    CHECK(e2.n() == 2);
    CHECK(e2.m() == 0);

    // 'B' encodes n=3; 'w' = 119-63 = 56 = 111000b -> edges (0,1),(0,2),(1,2)
    Graph k3 = parse_graph6("Bw");
    CHECK(k3.n() == 3);
    CHECK(k3.m() == 3);
    CHECK(k3.has_edge(0, 1));
    CHECK(k3.has_edge(0, 2));
    CHECK(k3.has_edge(1, 2));
}

TEST_CASE("graph6 encoding matches the hand-decoded examples") {
    CHECK(encode_graph6(gen("complete:2")) == "A_");
    CHECK(encode_graph6(from_edge_list(2, {})) == "A?");
    CHECK(encode_graph6(gen("complete:3")) == "Bw");
    CHECK(encode_graph6(gen("cycle:3")) == "Bw");
}

TEST_CASE("graph6 header and error handling") {
    CHECK(parse_graph6(">>graph6<<Bw").m() == 3);
    CHECK(parse_graph6("Bw\n").m() == 3);
    CHECK_THROWS_AS(parse_graph6("B\x01"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("B"), std::invalid_argument);   // truncated payload
    CHECK_THROWS_AS(parse_graph6("Bww"), std::invalid_argument); // excess payload
    CHECK_THROWS_AS(parse_graph6("~~?@?"), std::invalid_argument); // n beyond cap
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
}

TEST_CASE("graph6 round-trip on the full n=4 corpus") {
    for_each_labeled_graph(4, [](const Graph& g) {
        Graph back = parse_graph6(encode_graph6(g));
        CHECK(back == g);
    });
}

TEST_CASE("graph6 round-trip on larger random graphs (long size field)") {
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        GeneratorSpec spec;
        spec.family = Family::Gnp;
        spec.params = {80};
        spec.p = 0.3;
        spec.seed = seed;
        Graph g = generate(spec);
        CHECK(parse_graph6(encode_graph6(g)) == g);
    }
}

TEST_CASE("generator families") {
    Graph b1 = gen("book:1");
    CHECK(b1.n() == 3);
    CHECK(b1.m() == 3);

    Graph b3 = gen("book:3");
    CHECK(b3.n() == 5);
    CHECK(b3.m() == 7);

    Graph fan5 = gen("fan:5");
    CHECK(fan5.n() == 5);
    CHECK(fan5.m() == 7);
    CHECK(clique_number(fan5).omega == 3);

    Graph k5 = gen("complete:5");
    CHECK(k5.m() == 10);

    Graph c6 = gen("cycle:6");
    for (int v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);

    Graph p4 = gen("path:4");
    CHECK(p4.m() == 3);

    Graph pet = gen("petersen");
    CHECK(pet.n() == 10);
    CHECK(pet.m() == 15);
    for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
    CHECK(gen("kneser:5:2").m() == 15);

    Graph km = gen("complete_multipartite:2,3,4");
    CHECK(km.n() == 9);
    CHECK(km.m() == 2 * 3 + 2 * 4 + 3 * 4);
    CHECK(clique_number(km).omega == 3);
}

TEST_CASE("stacked_planar always has m = 3n - 6") {
    for (int n : {4, 6, 10, 25}) {
        for (uint64_t seed : {0ull, 1ull, 42ull}) {
            GeneratorSpec spec;
            spec.family = Family::StackedPlanar;
            spec.params = {n};
            spec.seed = seed;
            Graph g = generate(spec);
            CHECK(g.m() == 3 * n - 6);
            if (n >= 4) CHECK(max_triangles_per_edge(g) >= 2);
        }
    }
}

TEST_CASE("generators are deterministic for fixed seed") {
    GeneratorSpec spec;
    spec.family = Family::Gnp;
    spec.params = {12};
    spec.p = 0.5;
    spec.seed = 7;
    CHECK(generate(spec) == generate(spec));
}

TEST_CASE("generator parameter validation") {
    CHECK_THROWS_AS(gen("cycle:2"), std::invalid_argument);
    CHECK_THROWS_AS(gen("book:0"), std::invalid_argument);
    CHECK_THROWS_AS(gen("gnp:5:1.5"), std::invalid_argument);
    CHECK_THROWS_AS(gen("stacked_planar:3"), std::invalid_argument);
    CHECK_THROWS_AS(gen("nosuch:3"), std::invalid_argument);
}

TEST_CASE("max_triangles_per_edge") {
    CHECK(max_triangles_per_edge(gen("complete:4")) == 2);
    CHECK(max_triangles_per_edge(gen("cycle:5")) == 0);
    CHECK(max_triangles_per_edge(gen("book:3")) == 3);  // the spine edge
    CHECK(max_triangles_per_edge(from_edge_list(2, {})) == 0);
}

TEST_CASE("has_cycle_of_length") {
    CHECK(has_cycle_of_length(gen("cycle:5"), 5));
    CHECK_FALSE(has_cycle_of_length(gen("cycle:5"), 4));
    CHECK(has_cycle_of_length(gen("complete:4"), 3));
    CHECK(has_cycle_of_length(gen("complete:4"), 4));
    CHECK_FALSE(has_cycle_of_length(gen("path:6"), 3));
    CHECK_THROWS_AS(has_cycle_of_length(gen("cycle:5"), 2), std::invalid_argument);
    CHECK_THROWS_AS(has_cycle_of_length(gen("cycle:5"), 13), std::invalid_argument);
}

TEST_CASE("labeled enumeration counts") {
    CHECK(labeled_graph_count(3) == 8);
    CHECK(labeled_graph_count(4) == 64);
    CHECK(labeled_graph_count(6) == 32768);
    CHECK_THROWS_AS(labeled_graph_count(7), std::invalid_argument);

    std::set<std::string> seen;
    for_each_labeled_graph(3, [&](const Graph& g) { seen.insert(encode_graph6(g)); });
    CHECK(seen.size() == 8);
}

TEST_CASE("triangle-witness equivalences over the n=5 corpus") {
    for_each_labeled_graph(5, [](const Graph& g) {
        const long long t = triangles_by_intersection(g);
        CHECK((max_triangles_per_edge(g) == 0) == (t == 0));
        CHECK(has_cycle_of_length(g, 3) == (t > 0));
    });
}
