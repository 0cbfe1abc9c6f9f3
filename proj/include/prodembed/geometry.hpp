#pragma once

// Exact piecewise-linear geometry over Q: simplex intersection parities,
// mod-2 intersection numbers of PL images, general-position certification,
// and seeded random embeddings. Degenerate configurations are never
// classified approximately — they raise DegeneracyError and callers resample.

#include "prodembed/linalg.hpp"
#include "prodembed/rational.hpp"
#include "prodembed/rng.hpp"
#include "prodembed/simplicial_complex.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace prodembed {

// Mod-2 value with xor arithmetic.
class Parity {
public:
    Parity() = default;
    explicit Parity(int v) : v_(v & 1) {}
    int value() const { return v_; }
    Parity operator^(Parity o) const { return Parity(v_ ^ o.v_); }
    Parity& operator^=(Parity o) { v_ ^= o.v_; return *this; }
    friend bool operator==(Parity a, Parity b) { return a.v_ == b.v_; }
    friend bool operator!=(Parity a, Parity b) { return a.v_ != b.v_; }
private:
    int v_ = 0;
};

// A complex realized by exact coordinates; the map is linear on each simplex.
struct GeometricComplex {
    SimplicialComplex complex;
    std::vector<RationalPoint> coords; // indexed like complex vertices
    int ambient_dim = 0;

    std::vector<RationalPoint> points_of(const std::vector<int>& face) const;
};

// A simplex as its vertex coordinates (k+1 points for a k-simplex).
using Simplex = std::vector<RationalPoint>;

// Parity of the open-simplex intersection for dim s + dim t = ambient:
// 1 iff the barycentric system has its unique solution strictly inside both
// simplices. Throws AffineDependenceError for degenerate inputs,
// DegeneracyError when the system is singular or the solution touches a
// boundary, std::invalid_argument on a dimension mismatch.
Parity simplex_intersection_parity(const Simplex& s, const Simplex& t);

// Closed-simplex meeting classifier used by disjointness checks. For
// configurations whose barycentric system is underdetermined (parallel
// overlapping flats) the answer is Indeterminate and callers treat the
// configuration as non-generic.
enum class ClosedMeet { Disjoint, Intersecting, Indeterminate };
ClosedMeet closed_simplices_meet(const Simplex& s, const Simplex& t);

// Exact, complete predicates for points and segments (no Indeterminate
// escape hatch) — these answer correctly even for collinear overlaps.
bool point_on_segment(const RationalPoint& p, const RationalPoint& a, const RationalPoint& b);
bool segments_intersect(const RationalPoint& a, const RationalPoint& b,
                        const RationalPoint& c, const RationalPoint& d);

struct GeneralPositionReport {
    bool ok = true;
    std::string reason;
    std::vector<std::string> face_a, face_b; // certificate pair when !ok
};

// Certifies general position of the realization, over pairs of faces of the
// complex: every face is a nondegenerate simplex; vertex-disjoint pairs with
// dimension sum equal to the ambient dimension meet transversally if at all
// (nonsingular system, no boundary-touching solution); vertex-disjoint pairs
// with smaller sum have disjoint closed images. Pairs with larger sum are
// unconstrained (self-transverse map semantics).
GeneralPositionReport general_position_check(const GeometricComplex& g);

// Faces of dimension (top-1) with odd facet incidence: the mod-2 boundary.
// Empty exactly when the complex is a mod-2 cycle (closed manifold case).
std::vector<std::vector<int>> mod2_boundary(const SimplicialComplex& c);

// Mod-2 intersection number of two PL images with complementary facet
// dimensions (p + q = ambient). Mod-2 boundaries must have images disjoint
// from the other complex (BoundaryCollisionError otherwise); every facet
// pair must be generic (DegeneracyError with the pair named otherwise).
// check_boundaries=false skips the boundary-disjointness scan; pass it only
// when the inputs come from a general-position-certified embedding.
Parity intersection_parity_maps(const GeometricComplex& a, const GeometricComplex& b,
                                bool check_boundaries = true);

// Integer coordinates uniform in [-10^6, 10^6] per vertex, redrawn until
// general_position_check passes. Deterministic per seed; throws
// ResampleBudgetError after budget failed attempts.
GeometricComplex random_embedding(const SimplicialComplex& c, int ambient_dim,
                                  std::uint64_t seed, int budget = 100);

// Rebuild a geometric complex from top simplices; coincident points are
// identified exactly and labeled p0, p1, ... in first-appearance order.
GeometricComplex complex_of_simplices(const std::vector<Simplex>& tops);

// Cone with a fresh apex point (label "apex").
GeometricComplex cone_geometric(const GeometricComplex& base, const RationalPoint& apex);

// Append zeros (or given values) to reach a larger ambient dimension.
RationalPoint lifted_point(const RationalPoint& p, const Rational& last);
std::vector<Simplex> lifted_simplices(const std::vector<Simplex>& ss);

// Text format: vertex lines "label x_num/x_den ...", then facet lines of
// vertex labels. Labels must not contain '/'.
std::string geometric_to_text(const GeometricComplex& g);
GeometricComplex geometric_from_text(const std::string& text);

} // namespace prodembed
