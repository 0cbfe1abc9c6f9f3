#include "doctest.h"

#include "prodembed/errors.hpp"
#include "prodembed/geometry.hpp"
#include "prodembed/linalg.hpp"
#include "prodembed/rational.hpp"
#include "prodembed/rng.hpp"

#include <stdexcept>
#include <string>
#include <vector>

using namespace prodembed;

namespace {

RationalPoint pt(std::vector<long> v) {
    RationalPoint p;
    for (long x : v)
        p.emplace_back(x);
    return p;
}

} // namespace

TEST_CASE("rational text round-trip") {
    CHECK(rational_to_text(Rational(5)) == "5/1");
    Rational minus_half(-3, 6);
    minus_half.canonicalize(); // raw two-int construction is not canonical in GMP
    CHECK(rational_to_text(minus_half) == "-1/2");
    CHECK(rational_from_text("7/2") == Rational(7, 2));
    CHECK(rational_from_text("-4") == Rational(-4));
    CHECK(rational_from_text("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(rational_from_text("1/0"), ParseError);
    CHECK_THROWS_AS(rational_from_text("x"), ParseError);
    CHECK_THROWS_AS(rational_from_text("1/2/3"), ParseError);
    CHECK_THROWS_AS(rational_from_text(""), ParseError);
    CHECK(point_to_text(pt({1, -2})) == "1/1 -2/1");
}

TEST_CASE("linear solves are classified exactly") {
    // unique: x + y = 3, x - y = 1
    auto r = solve_linear({{1, 1}, {1, -1}}, {Rational(3), Rational(1)});
    REQUIRE(r.kind == SolveKind::Unique);
    CHECK(r.solution[0] == 2);
    CHECK(r.solution[1] == 1);

    auto inc = solve_linear({{1, 1}, {2, 2}}, {Rational(1), Rational(3)});
    CHECK(inc.kind == SolveKind::Inconsistent);

    auto und = solve_linear({{1, 1}, {2, 2}}, {Rational(1), Rational(2)});
    CHECK(und.kind == SolveKind::Underdetermined);

    CHECK(matrix_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(matrix_rank({{1, 0}, {0, 1}}) == 2);

    CHECK(affinely_independent({pt({0, 0}), pt({1, 0}), pt({0, 1})}));
    CHECK(!affinely_independent({pt({0, 0}), pt({1, 1}), pt({2, 2})}));
    CHECK(affinely_independent({}));
    CHECK(affinely_independent({pt({5, 5})}));
}

TEST_CASE("open-simplex intersection parity: plane examples") {
    // crossing diagonals of a square
    Simplex d1{pt({0, 0}), pt({2, 2})};
    Simplex d2{pt({0, 2}), pt({2, 0})};
    CHECK(simplex_intersection_parity(d1, d2).value() == 1);

    // far apart
    Simplex far1{pt({0, 0}), pt({1, 0})};
    Simplex far2{pt({3, 5}), pt({4, 6})};
    CHECK(simplex_intersection_parity(far1, far2).value() == 0);

    // lines cross outside one segment
    Simplex s1{pt({0, 0}), pt({1, 1})};
    Simplex s2{pt({3, 0}), pt({0, 3})};
    CHECK(simplex_intersection_parity(s1, s2).value() == 0);

    // shared endpoint: solution on the boundary is non-generic
    Simplex e1{pt({0, 0}), pt({2, 2})};
    Simplex e2{pt({0, 0}), pt({2, -2})};
    CHECK_THROWS_AS(simplex_intersection_parity(e1, e2), DegeneracyError);

    // T-shape: endpoint of one in the interior of the other
    Simplex t1{pt({0, 0}), pt({4, 0})};
    Simplex t2{pt({2, 0}), pt({2, 3})};
    CHECK_THROWS_AS(simplex_intersection_parity(t1, t2), DegeneracyError);
}

TEST_CASE("open-simplex intersection parity: segment through a triangle in R^3") {
    Simplex triangle{pt({0, 0, 0}), pt({4, 0, 0}), pt({0, 4, 0})};
    Simplex through{pt({1, 1, -1}), pt({1, 1, 1})};
    CHECK(simplex_intersection_parity(triangle, through).value() == 1);
    CHECK(simplex_intersection_parity(through, triangle).value() == 1);

    Simplex misses{pt({9, 9, -1}), pt({9, 9, 1})};
    CHECK(simplex_intersection_parity(triangle, misses).value() == 0);

    // degenerate triangle
    Simplex flat{pt({0, 0, 0}), pt({1, 1, 0}), pt({2, 2, 0})};
    CHECK_THROWS_AS(simplex_intersection_parity(flat, through), AffineDependenceError);

    // dimension sum mismatch
    Simplex seg{pt({0, 0, 0}), pt({1, 0, 0})};
    CHECK_THROWS_AS(simplex_intersection_parity(seg, through), std::invalid_argument);
}

TEST_CASE("closed-simplex meeting classifier") {
    CHECK(closed_simplices_meet({pt({0, 0}), pt({1, 0})}, {pt({5, 5}), pt({6, 6})}) ==
          ClosedMeet::Disjoint);
    CHECK(closed_simplices_meet({pt({0, 0}), pt({2, 2})}, {pt({0, 2}), pt({2, 0})}) ==
          ClosedMeet::Intersecting);
    // shared endpoint is a closed meet
    CHECK(closed_simplices_meet({pt({0, 0}), pt({1, 0})}, {pt({0, 0}), pt({0, 1})}) ==
          ClosedMeet::Intersecting);
    // collinear overlap: underdetermined system
    CHECK(closed_simplices_meet({pt({0, 0}), pt({4, 0})}, {pt({2, 0}), pt({6, 0})}) ==
          ClosedMeet::Indeterminate);
    // point vs segment
    CHECK(closed_simplices_meet({pt({1, 0})}, {pt({0, 0}), pt({2, 0})}) ==
          ClosedMeet::Intersecting);
    CHECK(closed_simplices_meet({pt({1, 5})}, {pt({0, 0}), pt({2, 0})}) ==
          ClosedMeet::Disjoint);
}

TEST_CASE("point_on_segment and segments_intersect are exact and total") {
    CHECK(point_on_segment(pt({1, 1}), pt({0, 0}), pt({2, 2})));
    CHECK(point_on_segment(pt({0, 0}), pt({0, 0}), pt({2, 2})));   // endpoint
    CHECK(!point_on_segment(pt({3, 3}), pt({0, 0}), pt({2, 2})));  // beyond
    CHECK(!point_on_segment(pt({1, 2}), pt({0, 0}), pt({2, 2})));  // off line
    CHECK(point_on_segment(pt({5, 5}), pt({5, 5}), pt({5, 5})));   // degenerate

    CHECK(segments_intersect(pt({0, 0}), pt({2, 2}), pt({0, 2}), pt({2, 0})));
    CHECK(segments_intersect(pt({0, 0}), pt({2, 2}), pt({2, 2}), pt({3, 0})));  // endpoint touch
    CHECK(segments_intersect(pt({0, 0}), pt({4, 0}), pt({2, 0}), pt({6, 0}))); // collinear overlap
    CHECK(!segments_intersect(pt({0, 0}), pt({1, 0}), pt({2, 0}), pt({3, 0}))); // collinear gap
    CHECK(!segments_intersect(pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1}))); // parallel
    CHECK(segments_intersect(pt({1, 0}), pt({1, 0}), pt({0, 0}), pt({2, 0})));  // point on segment
    CHECK(!segments_intersect(pt({0, 0}), pt({1, 1}), pt({3, 0}), pt({0, 3})));

    // exactness: near-miss by 1/10^9 is still a miss
    RationalPoint almost{Rational(1), Rational(1) + Rational(1, 1000000000)};
    CHECK(!point_on_segment(almost, pt({0, 0}), pt({2, 2})));
}

TEST_CASE("general position: points on a line are fine, coincident faces are not") {
    auto four = SimplicialComplex::from_facets({"a", "b", "c", "d"}, {});
    GeometricComplex g{four, {pt({1}), pt({2}), pt({3}), pt({4})}, 1};
    CHECK(general_position_check(g).ok);

    GeometricComplex dup{four, {pt({1}), pt({2}), pt({2}), pt({4})}, 1};
    auto r = general_position_check(dup);
    CHECK(!r.ok);
    CHECK(!r.face_a.empty());

    // two coincident triangles in R^4: sum < ambient forces disjoint closures
    auto two_tris = SimplicialComplex::from_facets(
        {}, {{"a0", "a1", "a2"}, {"b0", "b1", "b2"}});
    std::vector<RationalPoint> coords{pt({0, 0, 0, 0}), pt({1, 0, 0, 0}), pt({0, 1, 0, 0}),
                                      pt({0, 0, 0, 0}), pt({1, 0, 0, 0}), pt({0, 1, 0, 0})};
    CHECK(!general_position_check({two_tris, coords, 4}).ok);

    // a degenerate face is rejected even when nothing else collides
    auto tri = SimplicialComplex::from_facets({}, {{"a", "b", "c"}});
    CHECK(!general_position_check({tri, {pt({0, 0}), pt({1, 1}), pt({2, 2})}, 2}).ok);
}

TEST_CASE("general position allows transversal crossings of high-dimensional pairs") {
    // two segments crossing in R^2: dim sum == ambient, transversal => ok
    auto two_edges = SimplicialComplex::from_facets({}, {{"a0", "a1"}, {"b0", "b1"}});
    GeometricComplex crossing{two_edges,
                              {pt({0, 0}), pt({2, 2}), pt({0, 2}), pt({2, 0})}, 2};
    CHECK(general_position_check(crossing).ok);

    // but touching at an endpoint image is non-generic
    GeometricComplex touching{two_edges,
                              {pt({0, 0}), pt({2, 2}), pt({2, 2}), pt({4, 0})}, 2};
    CHECK(!general_position_check(touching).ok);
}

TEST_CASE("random embeddings are deterministic and certified") {
    auto k4 = complex_from_graph(parse_graph("kn:4"));
    auto e1 = random_embedding(k4, 3, 7);
    auto e2 = random_embedding(k4, 3, 7);
    REQUIRE(e1.coords.size() == e2.coords.size());
    for (std::size_t i = 0; i < e1.coords.size(); ++i)
        CHECK(e1.coords[i] == e2.coords[i]);
    CHECK(general_position_check(e1).ok);
    CHECK(e1.ambient_dim == 3);

    auto e3 = random_embedding(k4, 3, 8);
    bool same = true;
    for (std::size_t i = 0; i < e1.coords.size(); ++i)
        same = same && e1.coords[i] == e3.coords[i];
    CHECK(!same);

    for (std::uint64_t seed : {1, 2, 3, 4, 5})
        CHECK(general_position_check(random_embedding(k4, 2, seed)).ok);
}

TEST_CASE("mod2 boundary distinguishes cycles from chains") {
    auto seg = SimplicialComplex::from_facets({}, {{"a", "b"}});
    CHECK(mod2_boundary(seg).size() == 2);

    auto path2 = SimplicialComplex::from_facets({}, {{"a", "b"}, {"b", "c"}});
    CHECK(mod2_boundary(path2).size() == 2); // interior vertex cancels

    auto tri = skeleton_complex(1, 2);
    CHECK(mod2_boundary(tri).empty());

    auto torus = triangulated_torus(3, 4);
    CHECK(mod2_boundary(torus).empty());

    // a disk: triangle with one filled face plus a free edge
    auto fan = SimplicialComplex::from_facets({}, {{"a", "b", "c"}, {"c", "d"}});
    auto bd = mod2_boundary(fan);
    CHECK(!bd.empty());
}

TEST_CASE("intersection parity of maps: closed curves in the plane always meet evenly") {
    auto triangle = [](std::vector<std::vector<long>> vs) {
        Simplex s0{pt(vs[0]), pt(vs[1])}, s1{pt(vs[1]), pt(vs[2])}, s2{pt(vs[2]), pt(vs[0])};
        return complex_of_simplices({s0, s1, s2});
    };
    // far apart: no crossings
    auto t1 = triangle({{0, 0}, {7, 1}, {3, 5}});
    auto t2 = triangle({{20, 20}, {27, 22}, {22, 29}});
    CHECK(intersection_parity_maps(t1, t2).value() == 0);
    // nested: still no crossings
    auto big = triangle({{-10, -10}, {10, -9}, {0, 12}});
    auto small = triangle({{3, 1}, {4, 1}, {3, 2}});
    CHECK(intersection_parity_maps(big, small).value() == 0);
    // genuinely overlapping: exactly two transversal crossings, so parity 0
    auto u1 = triangle({{0, 0}, {10, 1}, {5, 9}});
    auto u2 = triangle({{4, -4}, {14, -1}, {6, 7}});
    CHECK(intersection_parity_maps(u1, u2).value() == 0);
}

TEST_CASE("intersection parity of maps: boundary collisions and degeneracies are loud") {
    auto seg = [](long x0, long y0, long x1, long y1) {
        auto c = SimplicialComplex::from_facets({}, {{"a", "b"}});
        return GeometricComplex{
            c, {pt(std::vector<long>{x0, y0}), pt(std::vector<long>{x1, y1})}, 2};
    };
    // open chains whose boundaries stay clear: fine
    CHECK(intersection_parity_maps(seg(0, 0, 2, 2), seg(0, 2, 2, 0)).value() == 1);
    // an endpoint of one chain on the image of the other: boundary collision
    CHECK_THROWS_AS(intersection_parity_maps(seg(0, 0, 2, 2), seg(1, 1, 5, 1)),
                    BoundaryCollisionError);
    // same input with the scan disabled: the facet pair itself is degenerate
    CHECK_THROWS_AS(intersection_parity_maps(seg(0, 0, 2, 2), seg(1, 1, 5, 1), false),
                    DegeneracyError);
    // dimension mismatch
    auto tri = SimplicialComplex::from_facets({}, {{"a", "b", "c"}});
    GeometricComplex gt{tri, {pt({0, 0}), pt({1, 0}), pt({0, 1})}, 2};
    CHECK_THROWS_AS(intersection_parity_maps(gt, seg(5, 5, 6, 6)), std::invalid_argument);
}

TEST_CASE("complex_of_simplices identifies shared points exactly") {
    Simplex s1{pt({0, 0}), pt({1, 0})};
    Simplex s2{pt({1, 0}), pt({1, 1})};
    auto g = complex_of_simplices({s1, s2});
    CHECK(g.complex.num_vertices() == 3); // (1,0) identified
    CHECK(g.complex.facets().size() == 2);
    CHECK(g.ambient_dim == 2);
    CHECK(g.complex.index_of("p0").has_value());

    // labels follow first appearance
    CHECK(g.coords[*g.complex.index_of("p0")] == pt({0, 0}));
}

TEST_CASE("cone_geometric puts the apex last") {
    auto base = complex_of_simplices({{pt({0, 0}), pt({1, 0})}});
    auto coned = cone_geometric(base, pt({0, 5}));
    CHECK(coned.complex.num_vertices() == 3);
    CHECK(coned.complex.index_of("apex").has_value());
    CHECK(coned.coords.back() == pt({0, 5}));
    CHECK(coned.complex.facets().front().size() == 3);
}

TEST_CASE("lifting appends a coordinate") {
    CHECK(lifted_point(pt({1, 2}), Rational(7)) == pt({1, 2, 7}));
    auto lifted = lifted_simplices({{pt({1, 2}), pt({3, 4})}});
    CHECK(lifted[0][0] == pt({1, 2, 0}));
    CHECK(lifted[0][1] == pt({3, 4, 0}));
}

TEST_CASE("geometric text round-trip") {
    auto k4 = complex_from_graph(parse_graph("kn:4"));
    auto e = random_embedding(k4, 3, 11);
    auto back = geometric_from_text(geometric_to_text(e));
    CHECK(back.ambient_dim == e.ambient_dim);
    CHECK(complexes_equal(back.complex, e.complex));
    REQUIRE(back.coords.size() == e.coords.size());
    for (std::size_t i = 0; i < e.coords.size(); ++i)
        CHECK(back.coords[i] == e.coords[i]);

    CHECK_THROWS_AS(geometric_from_text(""), ParseError);
    CHECK_THROWS_AS(geometric_from_text("a 1/1 2/1\nb 1/1\na b\n"), ParseError);
}

TEST_CASE("deterministic rng draws are reproducible and in range") {
    DetRng a(123), b(123);
    for (int i = 0; i < 1000; ++i) {
        auto x = a.uniform_int(-50, 50);
        CHECK(x == b.uniform_int(-50, 50));
        CHECK(x >= -50);
        CHECK(x <= 50);
    }
    CHECK(a.uniform_int(7, 7) == 7);
    DetRng c(124);
    bool all_same = true;
    for (int i = 0; i < 20; ++i)
        all_same = all_same && (DetRng(123).raw() == c.raw());
    CHECK(!all_same);
}
