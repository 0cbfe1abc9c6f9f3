#include "prodembed/campaign.hpp"

#include "prodembed/errors.hpp"
#include "prodembed/rng.hpp"

#include <optional>

namespace prodembed {

namespace {

SimplicialComplex sigma03_power(int n) {
    SimplicialComplex four = SimplicialComplex::from_facets({"v0", "v1", "v2", "v3"}, {});
    return join_power(four, n);
}

GeometricComplex random_closed_curve(const SimplicialComplex& cycle, DetRng& rng) {
    GeometricComplex g;
    g.complex = cycle;
    g.ambient_dim = 2;
    for (int v = 0; v < cycle.num_vertices(); ++v) {
        RationalPoint p;
        for (int i = 0; i < 2; ++i)
            p.emplace_back(static_cast<long>(rng.uniform_int(-1000000, 1000000)));
        g.coords.push_back(std::move(p));
    }
    return g;
}

GeometricComplex random_torus_map(const SimplicialComplex& torus, DetRng& rng) {
    GeometricComplex g;
    g.complex = torus;
    g.ambient_dim = 4;
    for (int v = 0; v < torus.num_vertices(); ++v) {
        RationalPoint p;
        for (int i = 0; i < 4; ++i)
            p.emplace_back(static_cast<long>(rng.uniform_int(-1000000, 1000000)));
        g.coords.push_back(std::move(p));
    }
    return g;
}

} // namespace

CampaignResult run_campaign(CampaignKind kind, int n, int trials, std::uint64_t seed) {
    if (trials < 1)
        throw HypothesisError("a campaign needs at least one trial");
    if (kind != CampaignKind::ConwayGordonK6 && n < 1)
        throw HypothesisError("this campaign kind requires n >= 1");
    CampaignResult res;
    res.kind = kind;
    res.n = kind == CampaignKind::ConwayGordonK6 ? 0 : n;
    res.trials = trials;
    res.seed = seed;

    SimplicialComplex shape = kind == CampaignKind::ConwayGordonK6
                                  ? complex_from_graph(complete_graph(6))
                                  : sigma03_power(n);
    int ambient = kind == CampaignKind::ConwayGordonK6 ? 3 : 2 * n - 1;

    for (int t = 0; t < trials; ++t) {
        std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
        try {
            GeometricComplex g = random_embedding(shape, ambient, trial_seed);
            bool pass = false;
            if (kind == CampaignKind::ConwayGordonK6) {
                K6LinkReport rep = find_linked_triangles_k6(g);
                if (rep.linked) ++res.linked_trials;
                ++res.v_histogram[rep.mod2_sum.value()];
                pass = rep.linked.has_value() && rep.mod2_sum == Parity(1);
            } else {
                bool linked = find_linked_pair(g).has_value();
                if (linked) ++res.linked_trials;
                ObstructionReport rep = compute_obstruction(g);
                ++res.v_histogram[rep.v.value()];
                bool v_ok = rep.v == Parity(1);
                pass = kind == CampaignKind::SacksN ? (linked && v_ok) : v_ok;
            }
            if (!pass)
                res.failing_seeds.push_back(trial_seed);
        } catch (const ResampleBudgetError&) {
            res.degenerate_seeds.push_back(trial_seed);
        } catch (const DegeneracyError&) {
            res.degenerate_seeds.push_back(trial_seed);
        }
    }
    res.success = res.failing_seeds.empty() && res.degenerate_seeds.empty();
    return res;
}

VanishingResult vanishing_campaign(int trials, std::uint64_t seed) {
    if (trials < 1)
        throw HypothesisError("a campaign needs at least one trial");
    VanishingResult res;
    res.trials = trials;
    res.seed = seed;

    SimplicialComplex hexagon = complex_from_graph(cycle_graph(6));
    SimplicialComplex heptagon = complex_from_graph(cycle_graph(7));
    SimplicialComplex torus = triangulated_torus(3, 3);
    const int budget = 100;

    for (int t = 0; t < trials; ++t) {
        std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
        DetRng rng(trial_seed);

        auto parity_of = [&](const SimplicialComplex& ca, const SimplicialComplex& cb,
                             bool planar) -> std::optional<Parity> {
            for (int attempt = 0; attempt < budget; ++attempt) {
                GeometricComplex a = planar ? random_closed_curve(ca, rng)
                                            : random_torus_map(ca, rng);
                GeometricComplex b = planar ? random_closed_curve(cb, rng)
                                            : random_torus_map(cb, rng);
                try {
                    return intersection_parity_maps(a, b);
                } catch (const DegeneracyError&) {
                } catch (const AffineDependenceError&) {
                }
            }
            return std::nullopt;
        };

        auto polys = parity_of(hexagon, heptagon, true);
        auto tori = parity_of(torus, torus, false);
        if (!polys || !tori) {
            res.degenerate_seeds.push_back(trial_seed);
            continue;
        }
        if (*polys != Parity(0))
            res.polygon_failing_seeds.push_back(trial_seed);
        if (*tori != Parity(0))
            res.torus_failing_seeds.push_back(trial_seed);
    }
    res.success = res.polygon_failing_seeds.empty() && res.torus_failing_seeds.empty() &&
                  res.degenerate_seeds.empty();
    return res;
}

std::string campaign_kind_name(CampaignKind k) {
    switch (k) {
    case CampaignKind::SacksN: return "sacks";
    case CampaignKind::ConwayGordonK6: return "k6";
    case CampaignKind::ObstructionInvariance: return "invariance";
    }
    return "?";
}

} // namespace prodembed
