#include "prodembed/standard_embedding.hpp"

#include "prodembed/errors.hpp"
#include "prodembed/linalg.hpp"
#include "prodembed/rng.hpp"

#include <string>

namespace prodembed {

namespace {

SimplicialComplex four_points() {
    return SimplicialComplex::from_facets({"v0", "v1", "v2", "v3"}, {});
}

bool parallel(const RationalPoint& u, const RationalPoint& v) {
    Matrix m{u, v};
    return matrix_rank(m) < 2;
}

} // namespace

StandardEmbedding standard_join_embedding(int n, std::uint64_t seed, int budget) {
    if (n < 1)
        throw HypothesisError("standard_join_embedding requires n >= 1");
    int ambient = 2 * n - 1;
    SimplicialComplex L = join_power(four_points(), n);
    DetRng rng(seed);

    for (int attempt = 0; attempt < budget; ++attempt) {
        StandardEmbedding e;
        e.n = n;
        for (int j = 1; j <= 4; ++j)
            e.params.emplace_back(j);
        for (int k = 0; k < n; ++k) {
            RationalPoint o, d;
            for (int i = 0; i < ambient; ++i)
                o.emplace_back(static_cast<long>(rng.uniform_int(-100, 100)));
            bool nonzero = false;
            while (!nonzero) {
                d.clear();
                for (int i = 0; i < ambient; ++i) {
                    d.emplace_back(static_cast<long>(rng.uniform_int(-20, 20)));
                    if (d.back() != 0) nonzero = true;
                }
            }
            e.origins.push_back(std::move(o));
            e.directions.push_back(std::move(d));
        }

        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = a + 1; b < n && ok; ++b)
                if (parallel(e.directions[a], e.directions[b])) ok = false;
        if (!ok) continue;

        e.realization.complex = L;
        e.realization.ambient_dim = ambient;
        const auto& groups = *L.groups();
        e.realization.coords.resize(L.num_vertices());
        for (int k = 0; k < n; ++k) {
            for (int j = 0; j < 4; ++j) {
                RationalPoint p;
                for (int i = 0; i < ambient; ++i)
                    p.push_back(e.origins[k][i] + e.params[j] * e.directions[k][i]);
                e.realization.coords[groups[k][j]] = std::move(p);
            }
        }
        if (!general_position_check(e.realization).ok) continue;

        for (int i = 0; i < ambient; ++i)
            e.apex.emplace_back(static_cast<long>(rng.uniform_int(-100, 100)));
        e.apex.emplace_back(static_cast<long>(rng.uniform_int(1, 200)));
        GeometricComplex lifted = e.realization;
        lifted.ambient_dim = 2 * n;
        for (auto& p : lifted.coords)
            p.emplace_back(0);
        e.coned = cone_geometric(lifted, e.apex);
        return e;
    }
    throw ResampleBudgetError("standard_join_embedding: no general-position lines in " +
                              std::to_string(budget) + " attempts (seed " +
                              std::to_string(seed) + ")");
}

Parity alternation_criterion(const StandardEmbedding& e, const SpherePair& p) {
    if (!spheres_complementary(p.alpha, p.beta))
        throw HypothesisError("alternation criterion needs a complementary pair");
    if (static_cast<int>(p.alpha.selections.size()) != e.n)
        throw HypothesisError("sphere pair does not match the embedding's factor count");
    for (int k = 0; k < e.n; ++k) {
        // params are increasing in the index, so interleaving is an index test
        const auto& a = p.alpha.selections[k];
        const auto& b = p.beta.selections[k];
        bool in0 = a[0] < b[0] && b[0] < a[1];
        bool in1 = a[0] < b[1] && b[1] < a[1];
        if (in0 == in1) return Parity(0); // nested or separated on line k
    }
    return Parity(1);
}

Parity membrane_linking_parity(const StandardEmbedding& e, const SpherePair& p) {
    if (!spheres_complementary(p.alpha, p.beta))
        throw HypothesisError("membrane linking needs a complementary pair");
    const GeometricComplex& L = e.realization;
    GeometricComplex beta = realize_sphere(L, p.beta);
    const auto& groups = *L.complex.groups();

    auto pt = [&](int k, int j) { return L.coords[groups[k][p.alpha.selections[k][j]]]; };
    RationalPoint a1 = pt(0, 0), c1 = pt(0, 1);

    if (e.n == 1) {
        GeometricComplex membrane = complex_of_simplices({{a1, c1}});
        return intersection_parity_maps(membrane, beta);
    }

    // Bend the line-1 segment at mid + offset; redraw the offset on any
    // degeneracy (the parity is bend-independent, see the header).
    DetRng rng(0x6d656d62u); // arbitrary fixed stream for the offsets
    int budget = 100;
    for (int attempt = 0; attempt < budget; ++attempt) {
        RationalPoint mid;
        for (std::size_t i = 0; i < a1.size(); ++i)
            mid.push_back((a1[i] + c1[i]) / 2 +
                          Rational(static_cast<long>(rng.uniform_int(-999, 999))));
        std::vector<Simplex> tops;
        for (int half = 0; half < 2; ++half) {
            Simplex base = half == 0 ? Simplex{a1, mid} : Simplex{mid, c1};
            for (unsigned mask = 0; mask < (1u << (e.n - 1)); ++mask) {
                Simplex s = base;
                for (int k = 1; k < e.n; ++k)
                    s.push_back(pt(k, (mask >> (k - 1)) & 1));
                tops.push_back(std::move(s));
            }
        }
        try {
            return intersection_parity_maps(complex_of_simplices(tops), beta);
        } catch (const DegeneracyError&) {
        } catch (const AffineDependenceError&) {
        }
    }
    throw ResampleBudgetError("membrane_linking_parity: no generic bend in " +
                              std::to_string(budget) + " attempts");
}

} // namespace prodembed
