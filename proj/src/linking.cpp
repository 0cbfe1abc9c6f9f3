#include "prodembed/linking.hpp"

#include "prodembed/errors.hpp"
#include "prodembed/rng.hpp"

#include <algorithm>
#include <string>

namespace prodembed {

namespace {

RationalPoint random_point(DetRng& rng, int dim, long lo = -1000000, long hi = 1000000) {
    RationalPoint p;
    for (int i = 0; i < dim; ++i)
        p.emplace_back(static_cast<long>(rng.uniform_int(lo, hi)));
    return p;
}

// n and ambient of an embedded join of 0-spheres, validated together.
int join_factors(const GeometricComplex& g) {
    if (!g.complex.groups())
        throw HypothesisError("realized complex carries no join structure");
    int n = static_cast<int>(g.complex.groups()->size());
    if (g.ambient_dim != 2 * n - 1)
        throw HypothesisError("join of " + std::to_string(n) +
                              " 0-spheres must live in dimension " +
                              std::to_string(2 * n - 1));
    return n;
}

} // namespace

Parity linking_parity_cone(const GeometricComplex& alpha, const GeometricComplex& beta,
                           const RationalPoint& apex, bool check_boundaries) {
    return intersection_parity_maps(cone_geometric(alpha, apex), beta, check_boundaries);
}

Parity linking_parity(const GeometricComplex& alpha, const GeometricComplex& beta,
                      std::uint64_t seed, int budget, bool check_boundaries) {
    DetRng rng(seed);
    for (int attempt = 0; attempt < budget; ++attempt) {
        RationalPoint apex = random_point(rng, alpha.ambient_dim);
        try {
            return linking_parity_cone(alpha, beta, apex, check_boundaries);
        } catch (const DegeneracyError&) {
        } catch (const AffineDependenceError&) {
        }
    }
    throw ResampleBudgetError("linking_parity: no generic apex in " +
                              std::to_string(budget) + " attempts (seed " +
                              std::to_string(seed) + ")");
}

ObstructionReport compute_obstruction(const GeometricComplex& g,
                                      const std::optional<std::vector<int>>& base) {
    ObstructionReport rep;
    rep.n = join_factors(g);
    rep.base = base ? *base : default_base_simplex(g.complex);
    const auto& groups = *g.complex.groups();
    if (rep.base.size() != groups.size())
        throw HypothesisError("base simplex needs one vertex per factor");
    for (std::size_t k = 0; k < groups.size(); ++k) {
        if (rep.base[k] < 0 || rep.base[k] >= static_cast<int>(groups[k].size()))
            throw HypothesisError("base vertex index outside its factor group");
        rep.base_labels.push_back(g.complex.label(groups[k][rep.base[k]]));
    }

    auto pairs = disjoint_pairs(rep.n, rep.base);
    rep.pairs_examined = static_cast<int>(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        GeometricComplex a = realize_sphere(g, pairs[i].alpha);
        GeometricComplex b = realize_sphere(g, pairs[i].beta);
        // The embedding is general-position-certified, so the boundary scan
        // inside the parity computation is redundant; skip it for speed.
        if (linking_parity(a, b, static_cast<std::uint64_t>(i), 100, false) == Parity(1))
            rep.linked.push_back(pairs[i]);
    }
    rep.v = Parity(static_cast<int>(rep.linked.size()) & 1);
    return rep;
}

std::optional<SpherePair> find_linked_pair(const GeometricComplex& g) {
    int n = join_factors(g);
    auto pairs = disjoint_pairs(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        GeometricComplex a = realize_sphere(g, pairs[i].alpha);
        GeometricComplex b = realize_sphere(g, pairs[i].beta);
        if (linking_parity(a, b, static_cast<std::uint64_t>(i), 100, false) == Parity(1))
            return pairs[i];
    }
    return std::nullopt;
}

K6LinkReport find_linked_triangles_k6(const GeometricComplex& g) {
    if (g.complex.num_vertices() != 6 || g.ambient_dim != 3)
        throw HypothesisError("find_linked_triangles_k6 needs 6 vertices in R^3");

    auto triangle = [&](const std::vector<int>& t) {
        GeometricComplex c;
        c.ambient_dim = 3;
        std::vector<std::string> labels;
        for (int v : t) {
            labels.push_back(g.complex.label(v));
            c.coords.push_back(g.coords[v]);
        }
        c.complex = SimplicialComplex::from_facets(
            labels, {{labels[0], labels[1]}, {labels[1], labels[2]}, {labels[0], labels[2]}});
        return c;
    };

    K6LinkReport rep;
    // Unordered partitions into two triangles: fix vertex 0 on the alpha side.
    for (int b = 1; b < 6; ++b) {
        for (int c = b + 1; c < 6; ++c) {
            std::vector<int> ta{0, b, c}, tb;
            for (int v = 1; v < 6; ++v)
                if (v != b && v != c) tb.push_back(v);
            GeometricComplex a = triangle(ta), bb = triangle(tb);
            Parity parity = linking_parity(a, bb, static_cast<std::uint64_t>(rep.pairs_examined),
                                           100, false);
            rep.mod2_sum ^= parity;
            if (parity == Parity(1) && !rep.linked) {
                auto names = [&](const std::vector<int>& t) {
                    std::vector<std::string> out;
                    for (int v : t) out.push_back(g.complex.label(v));
                    return out;
                };
                rep.linked = {names(ta), names(tb)};
            }
            ++rep.pairs_examined;
        }
    }
    return rep;
}

Parity cone_lift_parity(const GeometricComplex& alpha, const GeometricComplex& beta,
                        std::uint64_t seed, int budget) {
    if (alpha.ambient_dim != beta.ambient_dim)
        throw std::invalid_argument("ambient dimensions differ");
    auto lift = [](const GeometricComplex& g) {
        GeometricComplex out = g;
        out.ambient_dim = g.ambient_dim + 1;
        for (auto& p : out.coords)
            p.emplace_back(0);
        return out;
    };
    GeometricComplex la = lift(alpha), lb = lift(beta);
    DetRng rng(seed);
    for (int attempt = 0; attempt < budget; ++attempt) {
        RationalPoint apex_a = random_point(rng, alpha.ambient_dim);
        apex_a.emplace_back(static_cast<long>(rng.uniform_int(1, 1000000)));
        RationalPoint apex_b = random_point(rng, alpha.ambient_dim);
        apex_b.emplace_back(static_cast<long>(rng.uniform_int(1, 1000000)));
        try {
            return intersection_parity_maps(cone_geometric(la, apex_a),
                                            cone_geometric(lb, apex_b));
        } catch (const DegeneracyError&) {
        } catch (const AffineDependenceError&) {
        }
    }
    throw ResampleBudgetError("cone_lift_parity: no generic apex pair in " +
                              std::to_string(budget) + " attempts (seed " +
                              std::to_string(seed) + ")");
}

} // namespace prodembed
