#pragma once

// Exact dense linear solves over Q. Systems here are tiny (at most ~a dozen
// unknowns: barycentric coordinates of two simplices), so plain fraction-aware
// Gaussian elimination is all that is needed.

#include "prodembed/rational.hpp"

#include <vector>

namespace prodembed {

using Matrix = std::vector<std::vector<Rational>>;

enum class SolveKind {
    Inconsistent,    // no solution
    Unique,          // exactly one solution
    Underdetermined, // affine family of solutions
};

struct LinearSolveResult {
    SolveKind kind = SolveKind::Inconsistent;
    std::vector<Rational> solution; // populated iff kind == Unique
};

// Solves A x = b for a general rectangular A (rows x cols), classifying the
// solution set exactly.
LinearSolveResult solve_linear(const Matrix& a, const std::vector<Rational>& b);

// Rank of A over Q.
int matrix_rank(Matrix a);

// True iff the points are affinely independent (span a simplex of dimension
// pts.size()-1). Empty input is vacuously independent.
bool affinely_independent(const std::vector<RationalPoint>& pts);

} // namespace prodembed
