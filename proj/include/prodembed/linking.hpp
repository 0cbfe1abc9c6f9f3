#pragma once

// Mod-2 linking numbers of disjoint realized spheres, the constrained-pair
// obstruction parity v(f), linked-pair search over all disjoint join-sphere
// pairs, and disjoint-triangle linking in straight-line K6.

#include "prodembed/geometry.hpp"
#include "prodembed/spheres.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace prodembed {

// Parity of (cone over alpha from apex) meet beta, everything inside the
// spheres' own ambient space R^{2n-1}. The parity equals the mod-2 linking
// number for disjoint (n-1)-spheres. Throws DegeneracyError (retry with a
// fresh apex) or AffineDependenceError / BoundaryCollisionError.
// check_boundaries=false skips the boundary-vs-image scan; use it only for
// spheres taken from a general-position-certified embedding.
Parity linking_parity_cone(const GeometricComplex& alpha, const GeometricComplex& beta,
                           const RationalPoint& apex, bool check_boundaries = true);

// linking_parity_cone with a deterministic apex fallback: integer apexes in
// [-10^6, 10^6] drawn from seed until one is generic. Throws
// ResampleBudgetError after budget non-generic apexes.
Parity linking_parity(const GeometricComplex& alpha, const GeometricComplex& beta,
                      std::uint64_t seed, int budget = 100, bool check_boundaries = true);

struct ObstructionReport {
    int n = 0;
    std::vector<int> base;                // chosen vertex position per factor
    std::vector<std::string> base_labels; // the same, as vertex labels
    int pairs_examined = 0;               // 3^n
    std::vector<SpherePair> linked;       // constrained pairs with parity 1
    Parity v;                             // |linked| mod 2
};

// The obstruction parity of an embedded L = (sigma^0_3)^{*n} in R^{2n-1}:
// scans the 3^n complementary pairs with alpha containing the base simplex
// (default: lexicographically first vertex of each group). Apexes are drawn
// from per-pair-index seeds, so reports are reproducible without an external
// seed. Requires a general-position realization (use random_embedding or
// standard_join_embedding).
ObstructionReport compute_obstruction(const GeometricComplex& g,
                                      const std::optional<std::vector<int>>& base = std::nullopt);

// First linked pair among the 6^n/2 unordered disjoint pairs, or nullopt.
std::optional<SpherePair> find_linked_pair(const GeometricComplex& g);

struct K6LinkReport {
    int pairs_examined = 0; // the 10 unordered disjoint-triangle pairs
    std::optional<std::pair<std::vector<std::string>, std::vector<std::string>>> linked;
    Parity mod2_sum;        // over all 10 pairs
};

// Disjoint-triangle linking in a straight-line K6 in R^3 (6 vertices, all
// pairs adjacent). Returns the first linked pair and the mod-2 total.
K6LinkReport find_linked_triangles_k6(const GeometricComplex& g);

// Lift alpha and beta from R^{2n-1} into the hyperplane of R^{2n} and cone
// them from two generic apexes on the SAME side; the mod-2 intersection of
// the two cones equals the linking parity downstairs. (Opposite-side apexes
// separate the cones away from the hyperplane and always give 0.)
Parity cone_lift_parity(const GeometricComplex& alpha, const GeometricComplex& beta,
                        std::uint64_t seed, int budget = 100);

} // namespace prodembed
