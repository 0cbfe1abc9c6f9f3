#pragma once

// The link of a product vertex O = O_1 x ... x O_n in a product of graphs:
// by the link formula it is the join of the factor links, i.e. a join of
// 0-spheres with one group per factor. direct_product_link_2 rebuilds the
// 2-factor case from the product cell structure instead, as an independent
// cross-check. torus_pair_check verifies the combinatorial torus-pair
// picture around a disjoint sphere pair.

#include "prodembed/graph.hpp"
#include "prodembed/simplicial_complex.hpp"

#include <array>
#include <string>
#include <vector>

namespace prodembed {

// Join of 0-sphere families sigma^0_{d_k - 1}: group k has d_k vertices
// "g{k}:v0".."g{k}:v{d_k-1}", facets are the transversals. Throws on an
// empty list or a degree < 1.
SimplicialComplex product_vertex_link(const std::vector<int>& degrees);

// Link of (u, v) in g x h assembled from the square cells e x f with e at u
// and f at v: vertices are the product neighbors "(u', v)" and "(u, v')"
// (labels "u'|v", "u|v'"), one edge per square cell. Carries the 2-group
// join structure. Throws ParseError on unknown vertices.
SimplicialComplex direct_product_link_2(const Graph& g, const Graph& h,
                                        const std::string& u, const std::string& v);

// Per-factor selections: two distinct indices into the 4-point factor link
// {A, B, C, D} (indices 0..3).
using SphereSelections = std::vector<std::array<int, 2>>;

struct TorusPairReport {
    int n = 0;
    std::vector<std::string> torus_alpha;  // 3^n product-vertex labels
    std::vector<std::string> torus_beta;
    std::vector<std::string> common;       // expected: the all-O vertex only
    bool contains_cone_alpha = false;
    bool contains_cone_beta = false;
    bool meet_only_at_base = false;
    bool ok = false;
};

// The two n-tori around a complementary sphere pair in (K5)^n: T_alpha runs
// over the 3-cycles O_k A_k C_k, T_beta over O_k B_k D_k. Verifies that the
// cones over the spheres sit inside the tori and that the tori share only
// the base vertex. Throws HypothesisError on non-complementary selections.
TorusPairReport torus_pair_check(int n, const SphereSelections& alpha,
                                 const SphereSelections& beta);

} // namespace prodembed
