#include "prodembed/dimension.hpp"

#include "prodembed/errors.hpp"
#include "prodembed/planarity.hpp"

#include <algorithm>

namespace prodembed {

FactorClass classify_factor(const Graph& g) {
    if (g.num_vertices() == 0)
        throw HypothesisError("empty factor");
    if (!g.is_connected())
        throw HypothesisError("disconnected factor");

    if (g.num_vertices() == 1 && g.num_edges() == 0)
        return {FactorKind::Point, true};

    int deg1 = 0, deg2 = 0, deg_hi = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        int d = g.degree(v);
        if (d == 1) ++deg1;
        else if (d == 2) ++deg2;
        else if (d >= 3) ++deg_hi;
    }
    // Connected with max degree 2: a path or a cycle.
    if (deg_hi == 0) {
        if (deg1 == 0)
            return {FactorKind::Circle, true};
        if (deg1 == 2)
            return {FactorKind::Interval, true};
        // deg1 == 1 cannot happen in a connected graph with >= 2 vertices
        throw HypothesisError("unclassifiable factor degree profile");
    }
    return {FactorKind::Branched, is_planar(g).planar};
}

DimensionResult min_embedding_dim(const std::vector<Graph>& factors,
                                  int extra_circles, int extra_intervals) {
    if (extra_circles < 0 || extra_intervals < 0)
        throw HypothesisError("negative factor multiplicity");

    DimensionResult r;
    r.s = extra_circles;
    r.i = extra_intervals;
    bool some_branched_planar = false;
    for (const auto& g : factors) {
        FactorClass c = classify_factor(g);
        switch (c.kind) {
        case FactorKind::Point: break;
        case FactorKind::Interval: ++r.i; break;
        case FactorKind::Circle: ++r.s; break;
        case FactorKind::Branched:
            ++r.n;
            some_branched_planar |= c.planar;
            break;
        }
    }
    if (r.n == 0)
        throw HypothesisError(
            "no factor with a degree-3 vertex: the dimension formula requires n >= 1");

    if (r.i > 0 || some_branched_planar) {
        r.formula_case = 1;
        r.dim = 2 * r.n + r.s + r.i;
    } else {
        r.formula_case = 2;
        r.dim = 2 * r.n + r.s + 1;
    }
    return r;
}

std::string factor_kind_name(FactorKind k) {
    switch (k) {
    case FactorKind::Point: return "point";
    case FactorKind::Interval: return "interval";
    case FactorKind::Circle: return "circle";
    case FactorKind::Branched: return "branched";
    }
    return "?";
}

} // namespace prodembed
