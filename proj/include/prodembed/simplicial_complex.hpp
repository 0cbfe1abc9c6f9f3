#pragma once

// Abstract simplicial complexes stored by facets (maximal faces); the
// downward closure is implicit and materialized on demand. A complex may
// carry a join structure: an ordered partition of the vertices into factor
// groups such that no facet uses two vertices of one group. Joins of
// 0-spheres — the complexes carrying all the linking machinery — keep this
// structure through every operation that preserves it.

#include "prodembed/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace prodembed {

class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // vertices may be empty, in which case they are inferred from the facets
    // in order of appearance. Facets are normalized: sorted, deduplicated,
    // non-maximal faces dropped; vertices in no facet become 0-facets.
    static SimplicialComplex from_facets(const std::vector<std::string>& vertices,
                                         const std::vector<std::vector<std::string>>& facets);

    int num_vertices() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& vertex_labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[v]; }
    std::optional<int> index_of(const std::string& label) const;

    // Sorted index lists, lexicographic order across facets.
    const std::vector<std::vector<int>>& facets() const { return facets_; }
    int dim() const; // -1 for the empty complex

    // Ordered partition into factor groups, or nullopt.
    const std::optional<std::vector<std::vector<int>>>& groups() const { return groups_; }
    std::vector<std::vector<std::string>> group_labels() const;

    // Installs a join structure; throws ParseError if the groups are not a
    // partition of the vertices or some facet takes 2 vertices of a group.
    void set_groups(const std::vector<std::vector<std::string>>& groups);

    // The closure: every nonempty face, sorted by (dimension, lexicographic).
    std::vector<std::vector<int>> all_faces() const;
    bool has_face(const std::vector<std::string>& face) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> facets_;
    std::optional<std::vector<std::vector<int>>> groups_;

    friend SimplicialComplex join(const SimplicialComplex&, const SimplicialComplex&);
};

// ----- constructions ---------------------------------------------------------

// m-skeleton of the n-simplex, vertices v0..vn. Throws on m < 0 or m > n.
SimplicialComplex skeleton_complex(int m, int n);

// Facets are unions of a facet of a and a facet of b. Label collisions are
// resolved by prefixing "l:" / "r:". The join structures (a complex without
// one counts as a single group) are concatenated when the result satisfies
// the one-vertex-per-group invariant, and dropped otherwise.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

// join(base, point). Throws ParseError if apex_label is already a vertex.
SimplicialComplex cone(const SimplicialComplex& base, const std::string& apex_label);

// Faces f with v not in f and f + v a face. Keeps labels; restricts any join
// structure to the surviving vertices. Throws ParseError on unknown vertex.
SimplicialComplex vertex_link(const SimplicialComplex& c, const std::string& v);

// n-fold join of relabeled copies of base; copy k gets labels "g{k}:{orig}"
// and forms group k (dropped if a facet of base has more than one vertex).
SimplicialComplex join_power(const SimplicialComplex& base, int n);

SimplicialComplex relabeled_complex(const SimplicialComplex& c, const std::string& prefix);

// Counts of k-faces, k = 0..dim.
std::vector<long> f_vector(const SimplicialComplex& c);

// Same vertex label set and same facets-as-label-sets (groups not compared).
bool complexes_equal(const SimplicialComplex& a, const SimplicialComplex& b);

// True iff c has a join structure and is the FULL join of its groups as
// 0-dimensional factors: facets = all transversals, one vertex per group.
bool is_full_join(const SimplicialComplex& c);

// Canonical-form isomorphism for full-join families: both full joins with
// the same multiset of group sizes.
bool joins_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

// Graph as a 1-complex (edges as facets, isolated vertices as points).
SimplicialComplex complex_from_graph(const Graph& g);

// Triangulated flat torus on a p x q vertex grid (two triangles per grid
// square), vertices "t{i}.{j}"; p, q >= 3 keeps it simplicial. 2pq triangles.
SimplicialComplex triangulated_torus(int p, int q);

// ----- text format ------------------------------------------------------------
// Optional header "groups a b | c d | ..." followed by one facet per line,
// vertex labels space-separated. '#' starts a comment.
std::string complex_to_text(const SimplicialComplex& c);
SimplicialComplex complex_from_text(const std::string& text);

} // namespace prodembed
