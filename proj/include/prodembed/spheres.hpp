#pragma once

// Join-spheres of L = (sigma^0_3)^{*n}: an (n-1)-sphere is a choice of 2 of
// the 4 vertices in every factor group (the join of n 0-spheres). Two such
// spheres are vertex-disjoint iff the selections are complementary in every
// factor, which pairs the 6^n spheres into 6^n/2 unordered disjoint pairs.

#include "prodembed/geometry.hpp"
#include "prodembed/product_link.hpp"
#include "prodembed/simplicial_complex.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace prodembed {

struct JoinSphere {
    SphereSelections selections; // per factor: two indices 0..3, increasing
    bool operator==(const JoinSphere& o) const { return selections == o.selections; }
    bool operator<(const JoinSphere& o) const { return selections < o.selections; }
};

struct SpherePair {
    JoinSphere alpha;
    JoinSphere beta;
};

// All C(d+1,2)^n selections in lexicographic order.
std::vector<JoinSphere> enumerate_spheres(int n, int d = 3);

// Complementary (= vertex-disjoint) pairs. Without a base: unordered, alpha
// lexicographically below beta, count 6^n/2. With base c (one vertex index
// per factor): pairs with c in alpha, count 3^n (beta is then determined).
std::vector<SpherePair> disjoint_pairs(int n, const std::optional<std::vector<int>>& base = std::nullopt);

bool spheres_complementary(const JoinSphere& a, const JoinSphere& b);

JoinSphere complement_sphere(const JoinSphere& s, int d = 3);

// ----- against a realized L ---------------------------------------------------
// These expect a complex with n groups of equal size (labels as produced by
// product_vertex_link / join_power).

// Vertex labels of the sphere, per factor order.
std::vector<std::string> sphere_vertex_labels(const SimplicialComplex& L, const JoinSphere& s);

// The sphere as a subcomplex (facets = transversals of the selections).
SimplicialComplex sphere_subcomplex(const SimplicialComplex& L, const JoinSphere& s);

// The 2^n top simplices of the realized sphere, as coordinate tuples.
std::vector<Simplex> sphere_simplices(const GeometricComplex& L, const JoinSphere& s);

// The realized sphere as a geometric subcomplex of L.
GeometricComplex realize_sphere(const GeometricComplex& L, const JoinSphere& s);

// Default base simplex: position of the lexicographically smallest label in
// each group.
std::vector<int> default_base_simplex(const SimplicialComplex& L);

} // namespace prodembed
