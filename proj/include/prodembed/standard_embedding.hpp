#pragma once

// The standard embedding of L = (sigma^0_3)^{*n}: n pairwise non-parallel
// lines in general position in R^{2n-1}, four points on each line at
// parameters 1..4. Group k vertex j sits at origin_k + (j+1) * direction_k.
// The cone CL goes to R^{2n} from an apex above the hyperplane.

#include "prodembed/geometry.hpp"
#include "prodembed/spheres.hpp"

#include <cstdint>
#include <vector>

namespace prodembed {

struct StandardEmbedding {
    int n = 0;
    std::vector<RationalPoint> origins;     // one per line, in R^{2n-1}
    std::vector<RationalPoint> directions;  // one per line, nonzero
    std::vector<Rational> params;           // 1, 2, 3, 4 on every line
    RationalPoint apex;                     // in R^{2n}, last coordinate > 0
    GeometricComplex realization;           // L in R^{2n-1}
    GeometricComplex coned;                 // CL in R^{2n}
};

// Integer origins in [-100,100] and nonzero directions in [-20,20] drawn
// from seed, redrawn until the lines are pairwise non-parallel and the 4n
// points pass general_position_check. Deterministic per seed; throws
// ResampleBudgetError after budget failed draws.
StandardEmbedding standard_join_embedding(int n, std::uint64_t seed, int budget = 100);

// 1 iff the alpha and beta parameter pairs interleave on every line. Throws
// HypothesisError unless the pair is complementary.
Parity alternation_criterion(const StandardEmbedding& e, const SpherePair& p);

// Parity of (membrane over alpha) meet beta. The membrane is the join of the
// line-1 segment [A_1, C_1] with alpha's point pairs on the other lines; for
// n >= 2 the segment is bent at a midpoint pushed off the line so the
// configuration can be generic. The parity does not depend on the bend: two
// membranes with the same boundary differ by a closed cycle, and a closed
// cycle meets the closed sphere beta evenly.
Parity membrane_linking_parity(const StandardEmbedding& e, const SpherePair& p);

} // namespace prodembed
