#pragma once

// Almost embeddings of graphs: maps under which disjoint closed cells have
// disjoint images. Two instance flavors: combinatorial graph-to-graph maps
// (vertex images plus arc walks in the target) checked by shared-vertex
// traversal, and geometric instances (points plus polylines) checked by
// exact segment predicates. Includes the explicit K5 -> K33 map, product
// closure, and composition with a straight-line embedding of the target.

#include "prodembed/geometry.hpp"
#include "prodembed/graph.hpp"

#include <string>
#include <vector>

namespace prodembed {

// f: source -> target, linear on edges: each source edge goes to an arc
// (a simple vertex walk) in the target between the endpoint images.
struct GraphMapInstance {
    Graph source;
    Graph target;
    std::vector<int> vertex_image;          // source vertex -> target vertex
    std::vector<std::vector<int>> edge_arcs; // per source edge, >= 2 vertices
};

// Throws MapDefinitionError when the instance is internally inconsistent
// (sizes, ranges, arc endpoints vs vertex images, arc steps that are not
// target edges, repeated arc vertices).
void validate_graph_map(const GraphMapInstance& inst);

struct CheckResult {
    bool ok = true;
    std::string cell_a, cell_b; // violating closed-cell pair when !ok
    std::string reason;
};

// True iff every pair of disjoint closed cells (vertex/vertex, vertex/edge,
// edge/edge) has disjoint images. Combinatorially, two arc images meet iff
// their vertex sets meet: a shared target edge forces shared endpoints.
CheckResult almost_embedding_check(const GraphMapInstance& inst);

// A straight-line-per-segment map into R^d: vertex points plus a polyline
// per edge (first/last points must equal the endpoint images).
struct GeometricGraphInstance {
    Graph source;
    int ambient_dim = 0;
    std::vector<RationalPoint> vertex_image;
    std::vector<std::vector<RationalPoint>> edge_polylines;
};

void validate_geometric_map(const GeometricGraphInstance& inst);

// Exact check: point equality, point-on-segment, and segment intersection
// (including collinear overlaps) across all disjoint closed-cell pairs.
CheckResult almost_embedding_check(const GeometricGraphInstance& inst);

// The identity map of g (every arc is the edge itself).
GraphMapInstance identity_instance(const Graph& g);

// g mapped into its full edge subdivision; each arc passes the midpoint.
GraphMapInstance subdivision_instance(const Graph& g);

// The explicit almost embedding K5 -> K33': vertex v1 goes to the midpoint
// m of the subdivided edge a1-b1, v2..v5 go to a2, a3, b2, b3, and every K5
// edge goes to the shortest arc between the endpoint images (breadth-first,
// neighbors explored in label order, so ties break lexicographically).
GraphMapInstance k5_into_k33_map();

// Product closure: cells of source1 x source2 are pairs of cells; two
// product cells are disjoint iff some component pair is, and their images
// meet iff both component images meet. Checks every disjoint product pair.
CheckResult product_almost_embedding_check(const GraphMapInstance& f,
                                           const GraphMapInstance& g);

// Realize inst through a straight-line embedding of its target (matched by
// vertex labels): vertices to points, arcs to polylines.
GeometricGraphInstance compose_with_embedding(const GraphMapInstance& inst,
                                              const GeometricComplex& target_embedding);

// The identity instance of g realized through an embedding of g itself.
GeometricGraphInstance geometric_instance_from_embedding(const Graph& g,
                                                         const GeometricComplex& embedding);

} // namespace prodembed
