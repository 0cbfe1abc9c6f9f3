#include "prodembed/spheres.hpp"

#include "prodembed/errors.hpp"

#include <algorithm>

namespace prodembed {

namespace {

std::vector<std::array<int, 2>> two_subsets(int d) {
    std::vector<std::array<int, 2>> out;
    for (int i = 0; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
            out.push_back({i, j});
    return out;
}

// Groups of a realized L, validated: n groups, all of size d+1.
const std::vector<std::vector<int>>& join_groups(const SimplicialComplex& L) {
    if (!L.groups())
        throw HypothesisError("complex carries no join structure");
    return *L.groups();
}

} // namespace

std::vector<JoinSphere> enumerate_spheres(int n, int d) {
    if (n < 1)
        throw HypothesisError("enumerate_spheres requires n >= 1");
    auto subsets = two_subsets(d);
    std::vector<JoinSphere> out;
    std::vector<std::size_t> pick(n, 0);
    while (true) {
        JoinSphere s;
        for (int k = 0; k < n; ++k)
            s.selections.push_back(subsets[pick[k]]);
        out.push_back(std::move(s));
        int k = n;
        bool done = true;
        while (k > 0) {
            --k;
            if (++pick[k] < subsets.size()) { done = false; break; }
            pick[k] = 0;
        }
        if (done) break;
    }
    return out;
}

bool spheres_complementary(const JoinSphere& a, const JoinSphere& b) {
    if (a.selections.size() != b.selections.size()) return false;
    for (std::size_t k = 0; k < a.selections.size(); ++k) {
        const auto &x = a.selections[k], &y = b.selections[k];
        if (x[0] == y[0] || x[0] == y[1] || x[1] == y[0] || x[1] == y[1])
            return false;
    }
    return true;
}

JoinSphere complement_sphere(const JoinSphere& s, int d) {
    if (d != 3)
        throw HypothesisError("complement_sphere expects 4-point factors");
    JoinSphere c;
    for (const auto& sel : s.selections) {
        std::array<int, 2> rest{};
        int at = 0;
        for (int v = 0; v <= d; ++v)
            if (v != sel[0] && v != sel[1]) rest[at++] = v;
        c.selections.push_back(rest);
    }
    return c;
}

std::vector<SpherePair> disjoint_pairs(int n, const std::optional<std::vector<int>>& base) {
    std::vector<SpherePair> out;
    if (base) {
        if (static_cast<int>(base->size()) != n)
            throw HypothesisError("base simplex needs one vertex per factor");
        for (int c : *base)
            if (c < 0 || c > 3)
                throw HypothesisError("base vertex index outside 0..3");
        // alpha contains the base vertex in every factor; 3 choices of the
        // second alpha vertex per factor.
        std::vector<std::vector<std::array<int, 2>>> alts(n);
        for (int k = 0; k < n; ++k) {
            for (int v = 0; v <= 3; ++v) {
                if (v == (*base)[k]) continue;
                std::array<int, 2> sel{(*base)[k], v};
                std::sort(sel.begin(), sel.end());
                alts[k].push_back(sel);
            }
        }
        std::vector<std::size_t> pick(n, 0);
        while (true) {
            JoinSphere alpha;
            for (int k = 0; k < n; ++k)
                alpha.selections.push_back(alts[k][pick[k]]);
            out.push_back({alpha, complement_sphere(alpha)});
            int k = n;
            bool done = true;
            while (k > 0) {
                --k;
                if (++pick[k] < alts[k].size()) { done = false; break; }
                pick[k] = 0;
            }
            if (done) break;
        }
        return out;
    }
    for (const auto& alpha : enumerate_spheres(n)) {
        JoinSphere beta = complement_sphere(alpha);
        if (alpha < beta)
            out.push_back({alpha, beta});
    }
    return out;
}

std::vector<std::string> sphere_vertex_labels(const SimplicialComplex& L, const JoinSphere& s) {
    const auto& groups = join_groups(L);
    if (groups.size() != s.selections.size())
        throw HypothesisError("sphere and complex disagree on the factor count");
    std::vector<std::string> out;
    for (std::size_t k = 0; k < groups.size(); ++k)
        for (int j : s.selections[k]) {
            if (j < 0 || j >= static_cast<int>(groups[k].size()))
                throw HypothesisError("selection index outside the factor group");
            out.push_back(L.label(groups[k][j]));
        }
    return out;
}

SimplicialComplex sphere_subcomplex(const SimplicialComplex& L, const JoinSphere& s) {
    const auto& groups = join_groups(L);
    int n = static_cast<int>(groups.size());
    std::vector<std::vector<std::string>> facets;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::string> f;
        for (int k = 0; k < n; ++k) {
            int j = s.selections[k][(mask >> k) & 1];
            f.push_back(L.label(groups[k][j]));
        }
        facets.push_back(std::move(f));
    }
    SimplicialComplex out = SimplicialComplex::from_facets({}, facets);
    std::vector<std::vector<std::string>> gl;
    for (int k = 0; k < n; ++k) {
        std::vector<std::string> g;
        for (int j : s.selections[k])
            g.push_back(L.label(groups[k][j]));
        gl.push_back(std::move(g));
    }
    out.set_groups(gl);
    return out;
}

std::vector<Simplex> sphere_simplices(const GeometricComplex& L, const JoinSphere& s) {
    const auto& groups = join_groups(L.complex);
    int n = static_cast<int>(groups.size());
    std::vector<Simplex> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Simplex sim;
        for (int k = 0; k < n; ++k) {
            int j = s.selections[k][(mask >> k) & 1];
            sim.push_back(L.coords[groups[k][j]]);
        }
        out.push_back(std::move(sim));
    }
    return out;
}

GeometricComplex realize_sphere(const GeometricComplex& L, const JoinSphere& s) {
    GeometricComplex out;
    out.ambient_dim = L.ambient_dim;
    out.complex = sphere_subcomplex(L.complex, s);
    for (int v = 0; v < out.complex.num_vertices(); ++v) {
        auto i = L.complex.index_of(out.complex.label(v));
        if (!i)
            throw HypothesisError("sphere vertex missing from the realized complex");
        out.coords.push_back(L.coords[*i]);
    }
    return out;
}

std::vector<int> default_base_simplex(const SimplicialComplex& L) {
    const auto& groups = join_groups(L);
    std::vector<int> base;
    for (const auto& g : groups) {
        int best = 0;
        for (int j = 1; j < static_cast<int>(g.size()); ++j)
            if (L.label(g[j]) < L.label(g[best])) best = j;
        base.push_back(best);
    }
    return base;
}

} // namespace prodembed
