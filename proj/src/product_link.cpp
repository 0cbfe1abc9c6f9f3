#include "prodembed/product_link.hpp"

#include "prodembed/errors.hpp"

#include <algorithm>
#include <set>

namespace prodembed {

SimplicialComplex product_vertex_link(const std::vector<int>& degrees) {
    if (degrees.empty())
        throw ParseError("product_vertex_link: empty degree list");
    std::vector<std::vector<std::string>> groups;
    for (std::size_t k = 0; k < degrees.size(); ++k) {
        if (degrees[k] < 1)
            throw ParseError("product_vertex_link: degree must be >= 1");
        std::vector<std::string> g;
        for (int j = 0; j < degrees[k]; ++j)
            g.push_back("g" + std::to_string(k + 1) + ":v" + std::to_string(j));
        groups.push_back(std::move(g));
    }
    std::vector<std::string> verts;
    for (const auto& g : groups)
        verts.insert(verts.end(), g.begin(), g.end());
    // facets = all transversals
    std::vector<std::vector<std::string>> facets;
    std::vector<std::size_t> pick(groups.size(), 0);
    while (true) {
        std::vector<std::string> f;
        for (std::size_t k = 0; k < groups.size(); ++k)
            f.push_back(groups[k][pick[k]]);
        facets.push_back(std::move(f));
        std::size_t k = groups.size();
        bool done = true;
        while (k > 0) {
            --k;
            if (++pick[k] < groups[k].size()) { done = false; break; }
            pick[k] = 0;
        }
        if (done) break;
    }
    SimplicialComplex c = SimplicialComplex::from_facets(verts, facets);
    c.set_groups(groups);
    return c;
}

SimplicialComplex direct_product_link_2(const Graph& g, const Graph& h,
                                        const std::string& u, const std::string& v) {
    auto ui = g.index_of(u);
    auto vi = h.index_of(v);
    if (!ui)
        throw ParseError("direct_product_link_2: unknown vertex '" + u + "'");
    if (!vi)
        throw ParseError("direct_product_link_2: unknown vertex '" + v + "'");

    std::vector<std::string> side_g, side_h;
    for (int up : g.neighbors(*ui))
        side_g.push_back(g.label(up) + "|" + v);
    for (int vp : h.neighbors(*vi))
        side_h.push_back(u + "|" + h.label(vp));

    std::vector<std::string> verts = side_g;
    verts.insert(verts.end(), side_h.begin(), side_h.end());
    // one edge per square cell (u-u') x (v-v')
    std::vector<std::vector<std::string>> facets;
    for (const auto& a : side_g)
        for (const auto& b : side_h)
            facets.push_back({a, b});
    SimplicialComplex c = SimplicialComplex::from_facets(verts, facets);
    c.set_groups({side_g, side_h});
    return c;
}

namespace {

const char* kFactorLetters[4] = {"A", "B", "C", "D"};

// Product-vertex label from per-factor part names.
std::string tuple_label(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += '|';
        out += parts[i];
    }
    return out;
}

// All product labels over per-factor alternative sets.
std::vector<std::string> product_labels(const std::vector<std::vector<std::string>>& alts) {
    std::vector<std::string> out;
    std::vector<std::size_t> pick(alts.size(), 0);
    while (true) {
        std::vector<std::string> parts;
        for (std::size_t k = 0; k < alts.size(); ++k)
            parts.push_back(alts[k][pick[k]]);
        out.push_back(tuple_label(parts));
        std::size_t k = alts.size();
        bool done = true;
        while (k > 0) {
            --k;
            if (++pick[k] < alts[k].size()) { done = false; break; }
            pick[k] = 0;
        }
        if (done) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TorusPairReport torus_pair_check(int n, const SphereSelections& alpha,
                                 const SphereSelections& beta) {
    if (n < 1 || static_cast<int>(alpha.size()) != n || static_cast<int>(beta.size()) != n)
        throw HypothesisError("torus_pair_check: need one selection per factor");
    for (int k = 0; k < n; ++k) {
        std::set<int> all{alpha[k][0], alpha[k][1], beta[k][0], beta[k][1]};
        for (int x : all)
            if (x < 0 || x > 3)
                throw HypothesisError("torus_pair_check: selection index outside 0..3");
        if (alpha[k][0] == alpha[k][1] || beta[k][0] == beta[k][1] || all.size() != 4)
            throw HypothesisError("torus_pair_check: selections are not complementary in factor " +
                                  std::to_string(k + 1));
    }

    TorusPairReport r;
    r.n = n;
    std::vector<std::vector<std::string>> alts_a, alts_b;
    for (int k = 0; k < n; ++k) {
        alts_a.push_back({"O", kFactorLetters[alpha[k][0]], kFactorLetters[alpha[k][1]]});
        alts_b.push_back({"O", kFactorLetters[beta[k][0]], kFactorLetters[beta[k][1]]});
    }
    r.torus_alpha = product_labels(alts_a);
    r.torus_beta = product_labels(alts_b);

    std::set<std::string> set_a(r.torus_alpha.begin(), r.torus_alpha.end());
    for (const auto& l : r.torus_beta)
        if (set_a.count(l)) r.common.push_back(l);

    // Cone vertices: the base O and, for each factor and each picked point,
    // the product vertex that is O in every other coordinate.
    auto cone_inside = [&](const SphereSelections& sel,
                           const std::set<std::string>& torus) {
        std::vector<std::string> parts(n, "O");
        if (!torus.count(tuple_label(parts))) return false;
        for (int k = 0; k < n; ++k) {
            for (int j = 0; j < 2; ++j) {
                parts.assign(n, "O");
                parts[k] = kFactorLetters[sel[k][j]];
                if (!torus.count(tuple_label(parts))) return false;
            }
        }
        return true;
    };
    std::set<std::string> set_b(r.torus_beta.begin(), r.torus_beta.end());
    r.contains_cone_alpha = cone_inside(alpha, set_a);
    r.contains_cone_beta = cone_inside(beta, set_b);

    std::vector<std::string> base_only{tuple_label(std::vector<std::string>(n, "O"))};
    r.meet_only_at_base = (r.common == base_only);
    r.ok = r.contains_cone_alpha && r.contains_cone_beta && r.meet_only_at_base;
    return r;
}

} // namespace prodembed
