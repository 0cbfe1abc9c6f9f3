#include "prodembed/geometry.hpp"

#include "prodembed/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace prodembed {

std::vector<RationalPoint> GeometricComplex::points_of(const std::vector<int>& face) const {
    std::vector<RationalPoint> pts;
    for (int v : face) pts.push_back(coords[v]);
    return pts;
}

namespace {

int ambient_of(const Simplex& s) {
    if (s.empty())
        throw std::invalid_argument("empty simplex");
    int d = static_cast<int>(s[0].size());
    for (const auto& p : s)
        if (static_cast<int>(p.size()) != d)
            throw std::invalid_argument("mixed ambient dimensions in simplex");
    return d;
}

// Barycentric system for aff(s) meet aff(t): unknowns are the s-weights then
// the t-weights; d coordinate equations plus the two normalizations.
void build_system(const Simplex& s, const Simplex& t, Matrix& a, std::vector<Rational>& b) {
    int d = ambient_of(s);
    std::size_t cols = s.size() + t.size();
    a.assign(d + 2, std::vector<Rational>(cols, Rational(0)));
    b.assign(d + 2, Rational(0));
    for (int r = 0; r < d; ++r) {
        for (std::size_t i = 0; i < s.size(); ++i)
            a[r][i] = s[i][r];
        for (std::size_t j = 0; j < t.size(); ++j)
            a[r][s.size() + j] = -t[j][r];
    }
    for (std::size_t i = 0; i < s.size(); ++i)
        a[d][i] = 1;
    for (std::size_t j = 0; j < t.size(); ++j)
        a[d + 1][s.size() + j] = 1;
    b[d] = 1;
    b[d + 1] = 1;
}

} // namespace

Parity simplex_intersection_parity(const Simplex& s, const Simplex& t) {
    int d = ambient_of(s);
    if (ambient_of(t) != d)
        throw std::invalid_argument("simplices in different ambient spaces");
    int k = static_cast<int>(s.size()) - 1;
    int m = static_cast<int>(t.size()) - 1;
    if (k + m != d)
        throw std::invalid_argument("dimension sum must equal the ambient dimension");
    if (!affinely_independent(s) || !affinely_independent(t))
        throw AffineDependenceError("degenerate simplex in parity computation");

    Matrix a;
    std::vector<Rational> b;
    build_system(s, t, a, b);
    LinearSolveResult res = solve_linear(a, b);
    if (res.kind != SolveKind::Unique)
        throw DegeneracyError("singular barycentric system");
    bool inside = true;
    for (const auto& x : res.solution) {
        if (x == 0)
            throw DegeneracyError("intersection touches a simplex boundary");
        if (x < 0) inside = false;
    }
    return Parity(inside ? 1 : 0);
}

ClosedMeet closed_simplices_meet(const Simplex& s, const Simplex& t) {
    Matrix a;
    std::vector<Rational> b;
    build_system(s, t, a, b);
    LinearSolveResult res = solve_linear(a, b);
    if (res.kind == SolveKind::Inconsistent)
        return ClosedMeet::Disjoint;
    if (res.kind == SolveKind::Underdetermined)
        return ClosedMeet::Indeterminate;
    for (const auto& x : res.solution)
        if (x < 0) return ClosedMeet::Disjoint;
    return ClosedMeet::Intersecting;
}

bool point_on_segment(const RationalPoint& p, const RationalPoint& a, const RationalPoint& b) {
    // p = a + t (b - a) with t in [0,1]; works componentwise, exactly.
    std::size_t d = p.size();
    bool have_t = false;
    Rational t;
    for (std::size_t i = 0; i < d; ++i) {
        Rational u = b[i] - a[i], w = p[i] - a[i];
        if (u == 0) {
            if (w != 0) return false;
            continue;
        }
        Rational ti = w / u;
        if (!have_t) {
            t = ti;
            have_t = true;
        } else if (ti != t) {
            return false;
        }
    }
    if (!have_t) // a == b: degenerate segment, reduces to equality
        return p == a;
    return t >= 0 && t <= 1;
}

bool segments_intersect(const RationalPoint& a, const RationalPoint& b,
                        const RationalPoint& c, const RationalPoint& d) {
    std::size_t dim = a.size();
    // a + s(b-a) = c + t(d-c)
    Matrix m(dim, std::vector<Rational>(2));
    std::vector<Rational> rhs(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m[i][0] = b[i] - a[i];
        m[i][1] = c[i] - d[i];
        rhs[i] = c[i] - a[i];
    }
    LinearSolveResult res = solve_linear(m, rhs);
    if (res.kind == SolveKind::Inconsistent)
        return false;
    if (res.kind == SolveKind::Unique) {
        const Rational &s = res.solution[0], &t = res.solution[1];
        return s >= 0 && s <= 1 && t >= 0 && t <= 1;
    }
    // Collinear (all four points on one line): exact interval overlap.
    // Rank can only drop this far if b-a and d-c are parallel and c-a lies
    // in their span; pick any coordinate moving along the line.
    for (std::size_t i = 0; i < dim; ++i) {
        if (b[i] != a[i]) {
            Rational lo1(0), hi1(1);
            Rational u = b[i] - a[i];
            Rational tc = (c[i] - a[i]) / u, td = (d[i] - a[i]) / u;
            Rational lo2 = std::min(tc, td), hi2 = std::max(tc, td);
            return std::max(lo1, lo2) <= std::min(hi1, hi2);
        }
    }
    // a == b: segment degenerate to a point
    return point_on_segment(a, c, d);
}

GeneralPositionReport general_position_check(const GeometricComplex& g) {
    GeneralPositionReport rep;
    auto fail = [&](const std::string& why, const std::vector<int>& fa,
                    const std::vector<int>& fb) {
        rep.ok = false;
        rep.reason = why;
        for (int v : fa) rep.face_a.push_back(g.complex.label(v));
        for (int v : fb) rep.face_b.push_back(g.complex.label(v));
        return rep;
    };

    for (const auto& p : g.coords)
        if (static_cast<int>(p.size()) != g.ambient_dim)
            throw std::invalid_argument("coordinate dimension mismatch");

    const auto faces = g.complex.all_faces();
    for (const auto& f : faces)
        if (!affinely_independent(g.points_of(f)))
            return fail("degenerate face", f, {});

    for (std::size_t i = 0; i < faces.size(); ++i) {
        for (std::size_t j = i + 1; j < faces.size(); ++j) {
            const auto &fa = faces[i], &fb = faces[j];
            bool share = false;
            for (int v : fa)
                if (std::binary_search(fb.begin(), fb.end(), v)) { share = true; break; }
            if (share) continue;
            int sum = static_cast<int>(fa.size() + fb.size()) - 2;
            if (sum > g.ambient_dim) continue;
            Simplex sa = g.points_of(fa), sb = g.points_of(fb);
            if (sum == g.ambient_dim) {
                Matrix a;
                std::vector<Rational> b;
                build_system(sa, sb, a, b);
                LinearSolveResult res = solve_linear(a, b);
                if (res.kind != SolveKind::Unique)
                    return fail("singular complementary pair", fa, fb);
                for (const auto& x : res.solution)
                    if (x == 0)
                        return fail("boundary-touching complementary pair", fa, fb);
            } else {
                ClosedMeet meet = closed_simplices_meet(sa, sb);
                if (meet != ClosedMeet::Disjoint)
                    return fail(meet == ClosedMeet::Intersecting
                                    ? "disjoint faces with meeting images"
                                    : "indeterminate face pair",
                                fa, fb);
            }
        }
    }
    return rep;
}

std::vector<std::vector<int>> mod2_boundary(const SimplicialComplex& c) {
    std::map<std::vector<int>, int> count;
    for (const auto& f : c.facets()) {
        if (f.size() < 2) continue;
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != drop) sub.push_back(f[i]);
            ++count[sub];
        }
    }
    std::vector<std::vector<int>> out;
    for (const auto& [face, n] : count)
        if (n % 2) out.push_back(face);
    return out;
}

namespace {

std::string face_labels(const SimplicialComplex& c, const std::vector<int>& f) {
    std::string out = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ' ';
        out += c.label(f[i]);
    }
    return out + "}";
}

} // namespace

Parity intersection_parity_maps(const GeometricComplex& a, const GeometricComplex& b,
                                bool check_boundaries) {
    if (a.ambient_dim != b.ambient_dim)
        throw std::invalid_argument("ambient dimensions differ");
    auto top_dim = [](const GeometricComplex& g) {
        int d = g.complex.dim();
        for (const auto& f : g.complex.facets())
            if (static_cast<int>(f.size()) - 1 != d)
                throw std::invalid_argument("complex is not pure (mixed facet dimensions)");
        return d;
    };
    int p = top_dim(a), q = top_dim(b);
    if (p + q != a.ambient_dim)
        throw std::invalid_argument("facet dimensions do not sum to the ambient dimension");

    // Boundary images must avoid the other complex entirely.
    auto check_boundary = [](const GeometricComplex& x, const GeometricComplex& y,
                             const char* which) {
        for (const auto& bf : mod2_boundary(x.complex)) {
            Simplex sb = x.points_of(bf);
            for (const auto& f : y.complex.facets()) {
                ClosedMeet meet = closed_simplices_meet(sb, y.points_of(f));
                if (meet == ClosedMeet::Intersecting)
                    throw BoundaryCollisionError(std::string("boundary of ") + which +
                                                 " meets the other image at " +
                                                 face_labels(x.complex, bf));
                if (meet == ClosedMeet::Indeterminate)
                    throw DegeneracyError(std::string("indeterminate boundary pair at ") +
                                          face_labels(x.complex, bf));
            }
        }
    };
    if (check_boundaries) {
        check_boundary(a, b, "first complex");
        check_boundary(b, a, "second complex");
    }

    Parity total;
    for (const auto& fa : a.complex.facets()) {
        for (const auto& fb : b.complex.facets()) {
            try {
                total ^= simplex_intersection_parity(a.points_of(fa), b.points_of(fb));
            } catch (const DegeneracyError& e) {
                throw DegeneracyError(std::string(e.what()) + " [pair " +
                                      face_labels(a.complex, fa) + " x " +
                                      face_labels(b.complex, fb) + "]");
            }
        }
    }
    return total;
}

GeometricComplex random_embedding(const SimplicialComplex& c, int ambient_dim,
                                  std::uint64_t seed, int budget) {
    DetRng rng(seed);
    for (int attempt = 0; attempt < budget; ++attempt) {
        GeometricComplex g;
        g.complex = c;
        g.ambient_dim = ambient_dim;
        for (int v = 0; v < c.num_vertices(); ++v) {
            RationalPoint p;
            for (int i = 0; i < ambient_dim; ++i)
                p.emplace_back(static_cast<long>(rng.uniform_int(-1000000, 1000000)));
            g.coords.push_back(std::move(p));
        }
        if (general_position_check(g).ok)
            return g;
    }
    throw ResampleBudgetError("random_embedding: no general-position sample in " +
                              std::to_string(budget) + " attempts (seed " +
                              std::to_string(seed) + ")");
}

GeometricComplex complex_of_simplices(const std::vector<Simplex>& tops) {
    if (tops.empty())
        throw std::invalid_argument("no simplices");
    GeometricComplex g;
    g.ambient_dim = ambient_of(tops[0]);
    std::map<RationalPoint, std::string> seen;
    std::vector<std::vector<std::string>> facets;
    std::vector<std::string> labels;
    for (const auto& s : tops) {
        std::vector<std::string> f;
        for (const auto& p : s) {
            auto it = seen.find(p);
            if (it == seen.end()) {
                std::string l = "p" + std::to_string(seen.size());
                it = seen.insert({p, l}).first;
                labels.push_back(l);
                g.coords.push_back(p);
            }
            f.push_back(it->second);
        }
        facets.push_back(std::move(f));
    }
    g.complex = SimplicialComplex::from_facets(labels, facets);
    // from_facets keeps first-appearance order for inferred vertices, but we
    // passed the labels explicitly in the same order as coords
    return g;
}

GeometricComplex cone_geometric(const GeometricComplex& base, const RationalPoint& apex) {
    GeometricComplex g;
    g.ambient_dim = base.ambient_dim;
    g.complex = cone(base.complex, "apex");
    // cone() appends the apex as the last vertex
    g.coords = base.coords;
    g.coords.push_back(apex);
    if (g.complex.num_vertices() != static_cast<int>(g.coords.size()) ||
        g.complex.label(g.complex.num_vertices() - 1) != "apex")
        throw std::logic_error("cone vertex order drifted");
    return g;
}

RationalPoint lifted_point(const RationalPoint& p, const Rational& last) {
    RationalPoint q = p;
    q.push_back(last);
    return q;
}

std::vector<Simplex> lifted_simplices(const std::vector<Simplex>& ss) {
    std::vector<Simplex> out;
    for (const auto& s : ss) {
        Simplex t;
        for (const auto& p : s)
            t.push_back(lifted_point(p, Rational(0)));
        out.push_back(std::move(t));
    }
    return out;
}

std::string geometric_to_text(const GeometricComplex& g) {
    std::string out;
    for (int v = 0; v < g.complex.num_vertices(); ++v)
        out += g.complex.label(v) + " " + point_to_text(g.coords[v]) + "\n";
    for (const auto& f : g.complex.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) out += ' ';
            out += g.complex.label(f[i]);
        }
        out += '\n';
    }
    return out;
}

GeometricComplex geometric_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> labels;
    std::vector<RationalPoint> coords;
    std::vector<std::vector<std::string>> facets;
    int lineno = 0;
    int ambient = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;
        bool vertex_line = toks.size() >= 2;
        for (std::size_t i = 1; i < toks.size() && vertex_line; ++i)
            if (toks[i].find('/') == std::string::npos) vertex_line = false;
        if (vertex_line) {
            labels.push_back(toks[0]);
            RationalPoint p;
            for (std::size_t i = 1; i < toks.size(); ++i)
                p.push_back(rational_from_text(toks[i]));
            if (ambient < 0)
                ambient = static_cast<int>(p.size());
            else if (ambient != static_cast<int>(p.size()))
                throw ParseError("line " + std::to_string(lineno) +
                                 ": inconsistent coordinate count");
            coords.push_back(std::move(p));
        } else {
            facets.push_back(toks);
        }
    }
    if (labels.empty())
        throw ParseError("no vertex lines");
    GeometricComplex g;
    g.ambient_dim = ambient;
    g.complex = SimplicialComplex::from_facets(labels, facets);
    g.coords = std::move(coords);
    return g;
}

} // namespace prodembed
