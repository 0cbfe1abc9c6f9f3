#include "prodembed/linalg.hpp"

#include <cassert>
#include <utility>

namespace prodembed {

namespace {

// Forward elimination on an augmented matrix [A | b] (b optional). Returns
// the pivot column per pivot row. Rows are swapped in place.
std::vector<int> echelonize(Matrix& m, int cols_to_pivot) {
    std::vector<int> pivot_cols;
    int rows = static_cast<int>(m.size());
    int row = 0;
    for (int col = 0; col < cols_to_pivot && row < rows; ++col) {
        int pr = -1;
        for (int r = row; r < rows; ++r) {
            if (m[r][col] != 0) { pr = r; break; }
        }
        if (pr < 0) continue;
        std::swap(m[row], m[pr]);
        for (int r = row + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / m[row][col];
            for (std::size_t c = col; c < m[r].size(); ++c)
                m[r][c] -= f * m[row][c];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

} // namespace

LinearSolveResult solve_linear(const Matrix& a, const std::vector<Rational>& b) {
    int rows = static_cast<int>(a.size());
    assert(b.size() == a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;

    Matrix m(rows);
    for (int r = 0; r < rows; ++r) {
        assert(static_cast<int>(a[r].size()) == cols);
        m[r] = a[r];
        m[r].push_back(b[r]);
    }

    std::vector<int> pivots = echelonize(m, cols);
    int rank = static_cast<int>(pivots.size());

    // Inconsistent iff some zero row of A has nonzero rhs.
    for (int r = rank; r < rows; ++r) {
        if (m[r][cols] != 0)
            return {SolveKind::Inconsistent, {}};
    }
    if (rank < cols)
        return {SolveKind::Underdetermined, {}};

    // Unique: back substitution. pivots[r] is strictly increasing; with
    // rank == cols the pivot of row r is column r.
    std::vector<Rational> x(cols, Rational(0));
    for (int r = rank - 1; r >= 0; --r) {
        Rational acc = m[r][cols];
        for (int c = r + 1; c < cols; ++c)
            acc -= m[r][c] * x[c];
        x[r] = acc / m[r][r];
    }
    return {SolveKind::Unique, std::move(x)};
}

int matrix_rank(Matrix a) {
    if (a.empty()) return 0;
    return static_cast<int>(echelonize(a, static_cast<int>(a[0].size())).size());
}

bool affinely_independent(const std::vector<RationalPoint>& pts) {
    if (pts.size() <= 1) return true;
    std::size_t dim = pts[0].size();
    if (pts.size() - 1 > dim) return false;
    Matrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rational> row(dim);
        for (std::size_t c = 0; c < dim; ++c)
            row[c] = pts[i][c] - pts[0][c];
        diffs.push_back(std::move(row));
    }
    return matrix_rank(std::move(diffs)) == static_cast<int>(pts.size()) - 1;
}

} // namespace prodembed
