#include "doctest.h"

#include "prodembed/errors.hpp"
#include "prodembed/geometry.hpp"
#include "prodembed/graph.hpp"
#include "prodembed/product_link.hpp"
#include "prodembed/simplicial_complex.hpp"

#include <string>
#include <vector>

using namespace prodembed;

TEST_CASE("from_facets normalizes: sorted, deduplicated, non-maximal dropped") {
    auto c = SimplicialComplex::from_facets(
        {}, {{"b", "a"}, {"a", "b"}, {"a"}, {"c", "b", "a"}});
    CHECK(c.num_vertices() == 3);
    REQUIRE(c.facets().size() == 1);
    CHECK(c.facets()[0].size() == 3);
    CHECK(c.dim() == 2);

    // declared vertex in no facet becomes an isolated 0-facet
    auto d = SimplicialComplex::from_facets({"x", "y"}, {{"x"}});
    CHECK(d.num_vertices() == 2);
    CHECK(d.facets().size() == 2);
    CHECK(d.dim() == 0);

    CHECK_THROWS_AS(SimplicialComplex::from_facets({}, {{"a", "a"}}), ParseError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets({"a"}, {{"a", "z"}}), ParseError);
}

TEST_CASE("skeleton complexes and f-vectors") {
    auto sigma03 = skeleton_complex(0, 3); // four points
    CHECK(sigma03.num_vertices() == 4);
    CHECK(sigma03.dim() == 0);
    CHECK(f_vector(sigma03) == std::vector<long>{4});

    auto triangle_bdy = skeleton_complex(1, 2);
    CHECK(f_vector(triangle_bdy) == std::vector<long>{3, 3});

    auto k5_skel = skeleton_complex(1, 4);
    CHECK(f_vector(k5_skel) == std::vector<long>{5, 10});

    auto full = skeleton_complex(3, 3); // solid tetrahedron
    CHECK(f_vector(full) == std::vector<long>{4, 6, 4, 1});

    CHECK_THROWS(skeleton_complex(-1, 2));
    CHECK_THROWS(skeleton_complex(3, 2));
}

TEST_CASE("all_faces is the closure, ordered by dimension") {
    auto c = skeleton_complex(2, 3); // boundary of the tetrahedron
    auto faces = c.all_faces();
    CHECK(faces.size() == 4 + 6 + 4);
    CHECK(faces.front().size() == 1);
    CHECK(faces.back().size() == 3);
    CHECK(c.has_face({"v0", "v2"}));
    CHECK(c.has_face({"v1", "v2", "v3"}));
    CHECK(!c.has_face({"v0", "v1", "v2", "v3"}));
}

TEST_CASE("join concatenates and relabels on collision") {
    auto a = skeleton_complex(0, 1); // 2 points
    auto b = skeleton_complex(0, 1);
    auto j = join(a, b); // a 4-cycle: S^0 * S^0 = S^1
    CHECK(j.num_vertices() == 4);
    CHECK(j.facets().size() == 4);
    CHECK(j.dim() == 1);
    // collision resolved by l:/r: prefixes
    CHECK(j.index_of("l:v0").has_value());
    CHECK(j.index_of("r:v0").has_value());
    // both sides were ungrouped: each counts as one group
    REQUIRE(j.groups().has_value());
    CHECK(j.groups()->size() == 2);
    CHECK(mod2_boundary(j).empty()); // S^1 is closed

    // f-vector of a join: f(S^0 * S^0 * S^0) = octahedron boundary
    auto oct = join(j, skeleton_complex(0, 1));
    CHECK(f_vector(oct) == std::vector<long>{6, 12, 8});
    CHECK(mod2_boundary(oct).empty());
}

TEST_CASE("join drops the group structure when a facet breaks it") {
    // edge * edge = solid tetrahedron; each side takes 2 vertices of a group
    auto e1 = SimplicialComplex::from_facets({}, {{"a", "b"}});
    auto e2 = SimplicialComplex::from_facets({}, {{"c", "d"}});
    auto j = join(e1, e2);
    CHECK(j.facets().size() == 1);
    CHECK(j.dim() == 3);
    CHECK(!j.groups().has_value());
}

TEST_CASE("cone: the link of the apex is the base") {
    auto base = skeleton_complex(1, 2);
    auto c = cone(base, "apex");
    CHECK(c.num_vertices() == 4);
    CHECK(c.dim() == 2);
    CHECK(complexes_equal(vertex_link(c, "apex"), base));
    CHECK_THROWS_AS(cone(base, "v0"), ParseError); // label collision

    auto edge = SimplicialComplex::from_facets({}, {{"a", "b"}});
    CHECK(mod2_boundary(edge).size() == 2);                 // the two endpoints
    CHECK(mod2_boundary(cone(edge, "x")).size() == 3);      // the 2-simplex bounds its 3 edges
}

TEST_CASE("vertex_link inside a join of 0-spheres") {
    auto l2 = join_power(skeleton_complex(0, 3), 2);
    REQUIRE(l2.groups().has_value());
    CHECK(l2.groups()->size() == 2);
    CHECK(l2.num_vertices() == 8);
    CHECK(l2.facets().size() == 16);

    auto lk = vertex_link(l2, "g1:v0");
    CHECK(lk.num_vertices() == 4);
    CHECK(lk.facets().size() == 4);
    CHECK(lk.dim() == 0);
    for (const auto& lab : lk.vertex_labels())
        CHECK(lab.substr(0, 3) == "g2:");

    CHECK_THROWS_AS(vertex_link(l2, "nope"), ParseError);
}

TEST_CASE("join_power keeps one group per factor, including n = 1") {
    auto l1 = join_power(skeleton_complex(0, 3), 1);
    REQUIRE(l1.groups().has_value());
    CHECK(l1.groups()->size() == 1);
    CHECK(l1.num_vertices() == 4);

    auto l3 = join_power(skeleton_complex(0, 3), 3);
    REQUIRE(l3.groups().has_value());
    CHECK(l3.groups()->size() == 3);
    CHECK(l3.num_vertices() == 12);
    CHECK(l3.facets().size() == 64);
    CHECK(l3.dim() == 2);
    CHECK(mod2_boundary(l3).empty()); // S^2

    CHECK_THROWS(join_power(skeleton_complex(0, 3), 0));
}

TEST_CASE("join is associative up to join isomorphism") {
    auto s = skeleton_complex(0, 3);
    auto left = join(join(relabeled_complex(s, "x:"), relabeled_complex(s, "y:")),
                     relabeled_complex(s, "z:"));
    auto right = join(relabeled_complex(s, "x:"),
                      join(relabeled_complex(s, "y:"), relabeled_complex(s, "z:")));
    CHECK(f_vector(left) == f_vector(right));
    CHECK(joins_isomorphic(left, right));
}

TEST_CASE("is_full_join and joins_isomorphic") {
    auto l2 = join_power(skeleton_complex(0, 3), 2);
    CHECK(is_full_join(l2));
    CHECK(joins_isomorphic(l2, product_vertex_link({4, 4})));
    CHECK(!joins_isomorphic(l2, product_vertex_link({4, 3})));
    CHECK(!joins_isomorphic(l2, join_power(skeleton_complex(0, 3), 3)));

    auto ungrouped = skeleton_complex(0, 3);
    CHECK(!is_full_join(ungrouped));

    // grouped but missing a transversal facet: not a full join
    auto partial = SimplicialComplex::from_facets(
        {}, {{"a", "c"}, {"a", "d"}, {"b", "c"}});
    partial.set_groups({{"a", "b"}, {"c", "d"}});
    CHECK(!is_full_join(partial));
}

TEST_CASE("set_groups validates the partition") {
    auto c = SimplicialComplex::from_facets({}, {{"a", "c"}, {"b", "d"}});
    c.set_groups({{"a", "b"}, {"c", "d"}});
    REQUIRE(c.groups().has_value());

    auto bad = SimplicialComplex::from_facets({}, {{"a", "b"}});
    CHECK_THROWS_AS(bad.set_groups({{"a", "b"}}), ParseError);       // facet inside a group
    CHECK_THROWS_AS(bad.set_groups({{"a"}}), ParseError);            // not a partition
    CHECK_THROWS_AS(bad.set_groups({{"a", "z"}, {"b"}}), ParseError); // unknown vertex
}

TEST_CASE("complex text round-trip") {
    auto l2 = join_power(skeleton_complex(0, 3), 2);
    auto text = complex_to_text(l2);
    auto back = complex_from_text(text);
    CHECK(complexes_equal(l2, back));
    REQUIRE(back.groups().has_value());
    CHECK(back.group_labels() == l2.group_labels());

    auto torus = triangulated_torus(3, 3);
    CHECK(complexes_equal(torus, complex_from_text(complex_to_text(torus))));

    auto parsed = complex_from_text("# a segment with a stray point\n"
                                    "a b\n"
                                    "c\n");
    CHECK(parsed.num_vertices() == 3);
    CHECK(parsed.facets().size() == 2);
    CHECK(!parsed.groups().has_value());

    CHECK_THROWS_AS(complex_from_text("groups a b | c\na a\n"), ParseError);
    CHECK_THROWS_AS(complex_from_text("groups a | b\na c\n"), ParseError); // c not covered
}

TEST_CASE("triangulated torus is a closed surface") {
    auto t33 = triangulated_torus(3, 3);
    CHECK(f_vector(t33) == std::vector<long>{9, 27, 18});
    CHECK(mod2_boundary(t33).empty());
    CHECK(t33.index_of("t0.0").has_value());
    CHECK(t33.index_of("t2.2").has_value());

    auto t43 = triangulated_torus(4, 3);
    CHECK(f_vector(t43) == std::vector<long>{12, 36, 24});
    CHECK(mod2_boundary(t43).empty());

    CHECK_THROWS(triangulated_torus(2, 3));
}

TEST_CASE("complex_from_graph carries edges and isolated vertices") {
    Graph g = Graph::from_edges({"a", "b", "c"}, {{"a", "b"}});
    auto c = complex_from_graph(g);
    CHECK(c.num_vertices() == 3);
    CHECK(c.facets().size() == 2); // edge {a,b} and point {c}
    CHECK(c.dim() == 1);

    auto k5c = complex_from_graph(complete_graph(5));
    CHECK(f_vector(k5c) == std::vector<long>{5, 10});
}

TEST_CASE("product_vertex_link builds the join of factor links") {
    auto l = product_vertex_link({4, 4});
    CHECK(l.num_vertices() == 8);
    CHECK(l.facets().size() == 16);
    REQUIRE(l.groups().has_value());
    CHECK(l.groups()->size() == 2);

    auto small = product_vertex_link({2, 2});
    CHECK(small.facets().size() == 4); // the 4-cycle
    CHECK(mod2_boundary(small).empty());

    CHECK_THROWS(product_vertex_link({}));
    CHECK_THROWS(product_vertex_link({4, 0}));
}

TEST_CASE("direct product link agrees with the join of links") {
    // the central example: Lk of (v1, v1) in K5 x K5 is the join of two 4-point sets
    auto direct = direct_product_link_2(complete_graph(5), complete_graph(5), "v1", "v1");
    CHECK(direct.num_vertices() == 8);
    CHECK(direct.facets().size() == 16);
    CHECK(joins_isomorphic(direct, product_vertex_link({4, 4})));
    CHECK(joins_isomorphic(direct, join_power(skeleton_complex(0, 3), 2)));

    // mixed degrees
    auto mixed = direct_product_link_2(complete_bipartite_graph(3, 3), cycle_graph(4), "a1", "c2");
    CHECK(joins_isomorphic(mixed, product_vertex_link({3, 2})));

    CHECK_THROWS_AS(direct_product_link_2(complete_graph(5), complete_graph(5), "v1", "zz"),
                    ParseError);
}

TEST_CASE("torus pair check around a complementary sphere pair") {
    SphereSelections alpha{{0, 2}};
    SphereSelections beta{{1, 3}};
    auto r1 = torus_pair_check(1, alpha, beta);
    CHECK(r1.ok);
    CHECK(r1.n == 1);
    CHECK(r1.torus_alpha.size() == 3);
    CHECK(r1.common.size() == 1);
    CHECK(r1.contains_cone_alpha);
    CHECK(r1.contains_cone_beta);
    CHECK(r1.meet_only_at_base);

    SphereSelections a2{{0, 2}, {0, 1}};
    SphereSelections b2{{1, 3}, {2, 3}};
    auto r2 = torus_pair_check(2, a2, b2);
    CHECK(r2.ok);
    CHECK(r2.torus_alpha.size() == 9);
    CHECK(r2.torus_beta.size() == 9);

    SphereSelections overlap{{0, 2}, {0, 1}};
    CHECK_THROWS_AS(torus_pair_check(2, a2, overlap), HypothesisError);
}
