#include "doctest.h"

#include "prodembed/errors.hpp"
#include "prodembed/graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

using namespace prodembed;

TEST_CASE("builtin graphs have the expected shapes") {
    Graph k5 = complete_graph(5);
    CHECK(k5.num_vertices() == 5);
    CHECK(k5.num_edges() == 10);
    CHECK(k5.label(0) == "v1");
    CHECK(k5.label(4) == "v5");
    for (int v = 0; v < 5; ++v)
        CHECK(k5.degree(v) == 4);

    Graph k33 = complete_bipartite_graph(3, 3);
    CHECK(k33.num_vertices() == 6);
    CHECK(k33.num_edges() == 9);
    CHECK(k33.index_of("a1").has_value());
    CHECK(k33.index_of("b3").has_value());
    CHECK(!k33.has_edge(*k33.index_of("a1"), *k33.index_of("a2")));
    CHECK(k33.has_edge(*k33.index_of("a1"), *k33.index_of("b1")));

    Graph c6 = cycle_graph(6);
    CHECK(c6.num_vertices() == 6);
    CHECK(c6.num_edges() == 6);
    for (int v = 0; v < 6; ++v)
        CHECK(c6.degree(v) == 2);
    CHECK(c6.is_connected());

    Graph p4 = path_graph(4);
    CHECK(p4.num_edges() == 3);
    CHECK(p4.degree(0) == 1);
    CHECK(p4.degree(1) == 2);

    Graph p1 = path_graph(1);
    CHECK(p1.num_vertices() == 1);
    CHECK(p1.num_edges() == 0);
    CHECK(p1.is_connected());

    Graph tri = triod_graph();
    CHECK(tri.num_vertices() == 4);
    CHECK(tri.num_edges() == 3);
    CHECK(tri.degree(*tri.index_of("o")) == 3);
}

TEST_CASE("parse_graph resolves builtin names case-insensitively") {
    CHECK(parse_graph("k5").num_edges() == 10);
    CHECK(parse_graph("K5").num_edges() == 10);
    CHECK(parse_graph("k33").num_edges() == 9);
    CHECK(parse_graph("kn:6").num_edges() == 15);
    CHECK(parse_graph("knn:4").num_edges() == 16);
    CHECK(parse_graph("cycle:7").num_edges() == 7);
    CHECK(parse_graph("path:3").num_edges() == 2);
    CHECK(parse_graph("TRIOD").num_edges() == 3);
    CHECK_THROWS_AS(parse_graph("cycle:2"), ParseError);
    CHECK_THROWS_AS(parse_graph("kn:0"), ParseError);
}

TEST_CASE("parse_graph reads edge lists with comments and blank lines") {
    Graph g = parse_graph("# a square with a chord\n"
                          "a b\n"
                          "b c\n"
                          "\n"
                          "c d  # last side comes next\n"
                          "d a\n"
                          "a c\n");
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 5);
    CHECK(g.has_edge(*g.index_of("a"), *g.index_of("c")));
    CHECK(g.is_connected());
}

TEST_CASE("parse_graph reports malformed lines with their line number") {
    CHECK_THROWS_WITH_AS(parse_graph("a b\na a\n"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("a b c\n"), doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("a b\n\nb a\n"), doctest::Contains("line 3"), ParseError);
    CHECK_THROWS_AS(parse_graph("solo\n"), ParseError);
}

TEST_CASE("from_edges validates its input") {
    CHECK_THROWS_AS(Graph::from_edges({"a", "a"}, {}), ParseError);
    CHECK_THROWS_AS(Graph::from_edges({"a", "b"}, {{"a", "z"}}), ParseError);
    CHECK_THROWS_AS(Graph::from_edges({"a"}, {{"a", "a"}}), ParseError);
    CHECK_THROWS_AS(Graph::from_edges({"a", "b"}, {{"a", "b"}, {"b", "a"}}), ParseError);
    CHECK_THROWS_AS(Graph::from_edges({""}, {}), ParseError);

    Graph g = Graph::from_edges({"x", "y", "z"}, {{"x", "y"}});
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 1);
    CHECK(!g.is_connected());
    CHECK(g.components().size() == 2);
}

TEST_CASE("components partition the vertices") {
    Graph g = parse_graph("a b\nb c\nd e\n");
    auto comps = g.components();
    REQUIRE(comps.size() == 2);
    std::size_t total = 0;
    for (const auto& c : comps)
        total += c.size();
    CHECK(total == static_cast<std::size_t>(g.num_vertices()));
    CHECK(!g.is_connected());
}

TEST_CASE("subdivided_edge splits exactly one edge") {
    Graph k33 = complete_bipartite_graph(3, 3);
    Graph g = k33.subdivided_edge("a1", "b1", "m");
    CHECK(g.num_vertices() == 7);
    CHECK(g.num_edges() == 10);
    int m = *g.index_of("m");
    CHECK(g.degree(m) == 2);
    CHECK(g.has_edge(m, *g.index_of("a1")));
    CHECK(g.has_edge(m, *g.index_of("b1")));
    CHECK(!g.has_edge(*g.index_of("a1"), *g.index_of("b1")));

    CHECK_THROWS_AS(k33.subdivided_edge("a1", "a2", "m"), ParseError); // not an edge
    CHECK_THROWS_AS(k33.subdivided_edge("a1", "b1", "a2"), ParseError); // label taken
}

TEST_CASE("subdivide_all_edges doubles the edge count") {
    Graph c3 = cycle_graph(3);
    Graph s = subdivide_all_edges(c3);
    CHECK(s.num_vertices() == 6);
    CHECK(s.num_edges() == 6);
    CHECK(s.index_of("c1.c2.m").has_value());
    // every original vertex keeps its degree; every midpoint has degree 2
    for (int v = 0; v < s.num_vertices(); ++v)
        CHECK(s.degree(v) == 2);

    Graph k5s = subdivide_all_edges(complete_graph(5));
    CHECK(k5s.num_vertices() == 15);
    CHECK(k5s.num_edges() == 20);
}

TEST_CASE("relabeled needs a bijection and preserves the structure") {
    Graph tri = triod_graph();
    std::unordered_map<std::string, std::string> map{
        {"o", "center"}, {"a", "l1"}, {"b", "l2"}, {"c", "l3"}};
    Graph r = relabeled(tri, map);
    CHECK(r.num_edges() == 3);
    CHECK(r.degree(*r.index_of("center")) == 3);
    CHECK(!r.index_of("o").has_value());

    std::unordered_map<std::string, std::string> collapse{
        {"o", "x"}, {"a", "x"}, {"b", "l2"}, {"c", "l3"}};
    CHECK_THROWS_AS(relabeled(tri, collapse), ParseError);
    std::unordered_map<std::string, std::string> partial{{"o", "x"}};
    CHECK_THROWS_AS(relabeled(tri, partial), ParseError);
}

TEST_CASE("neighbors lists match the edge set") {
    Graph k4 = complete_graph(4);
    for (int v = 0; v < 4; ++v) {
        auto nb = k4.neighbors(v);
        CHECK(nb.size() == 3);
        for (int w : nb)
            CHECK(k4.has_edge(v, w));
    }
}
