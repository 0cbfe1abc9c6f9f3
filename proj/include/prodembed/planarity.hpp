#pragma once

// Planarity testing (Demoucron-Malgrange-Pertuiset face expansion, run per
// biconnected block) and Kuratowski witness extraction for nonplanar graphs.

#include "prodembed/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace prodembed {

enum class KuratowskiKind { K5, K33 };

// A subdivision of K5 or K33 inside the tested graph: branch vertices plus
// the subdivision paths joining them (label sequences; interior vertices are
// the subdivision points). Paths are internally disjoint.
struct KuratowskiWitness {
    KuratowskiKind kind;
    std::vector<std::string> branch_vertices;       // 5 for K5, 6 for K33
    std::vector<std::vector<std::string>> paths;    // 10 for K5, 9 for K33
};

struct PlanarityResult {
    bool planar = false;
    std::optional<KuratowskiWitness> witness; // present iff not planar
};

// O(V^2)-ish; fine at desk scale. Disconnected input is handled per
// component. A witness is produced for every nonplanar input by deleting
// edges while nonplanarity persists; the edge-minimal remainder is exactly a
// Kuratowski subdivision.
PlanarityResult is_planar(const Graph& g);

// Independent structural validation of a witness against the host graph:
// path steps are edges of g, paths are simple and internally disjoint,
// branch degrees fit the pattern, and contracting the paths yields K5 /
// K33 on the nose. Returns std::nullopt when valid, else a reason.
std::optional<std::string> check_kuratowski_witness(const Graph& g,
                                                    const KuratowskiWitness& w);

} // namespace prodembed
