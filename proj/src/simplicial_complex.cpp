#include "prodembed/simplicial_complex.hpp"

#include "prodembed/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace prodembed {

namespace {

bool is_subset(const std::vector<int>& small, const std::vector<int>& big) {
    // both sorted
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::string>& vertices,
    const std::vector<std::vector<std::string>>& facets) {
    SimplicialComplex c;
    std::map<std::string, int> index;
    auto add_vertex = [&](const std::string& l) {
        if (l.empty())
            throw ParseError("empty vertex label");
        auto [it, fresh] = index.insert({l, static_cast<int>(c.labels_.size())});
        if (fresh)
            c.labels_.push_back(l);
        return it->second;
    };
    for (const auto& v : vertices) {
        if (index.count(v))
            throw ParseError("duplicate vertex label '" + v + "'");
        add_vertex(v);
    }

    std::vector<std::vector<int>> raw;
    for (const auto& f : facets) {
        std::vector<int> idx;
        for (const auto& v : f) {
            if (!vertices.empty() && !index.count(v))
                throw ParseError("facet vertex '" + v + "' is not declared");
            idx.push_back(add_vertex(v));
        }
        std::sort(idx.begin(), idx.end());
        if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
            throw ParseError("facet repeats a vertex");
        if (!idx.empty())
            raw.push_back(std::move(idx));
    }

    // Cover isolated vertices, drop non-maximal faces, sort.
    std::vector<char> covered(c.labels_.size(), 0);
    for (const auto& f : raw)
        for (int v : f)
            covered[v] = 1;
    for (int v = 0; v < static_cast<int>(c.labels_.size()); ++v)
        if (!covered[v])
            raw.push_back({v});
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    for (const auto& f : raw) {
        bool maximal = true;
        for (const auto& g : raw) {
            if (&f != &g && f.size() < g.size() && is_subset(f, g)) {
                maximal = false;
                break;
            }
        }
        if (maximal)
            c.facets_.push_back(f);
    }
    return c;
}

std::optional<int> SimplicialComplex::index_of(const std::string& label) const {
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const auto& f : facets_)
        d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

std::vector<std::vector<std::string>> SimplicialComplex::group_labels() const {
    std::vector<std::vector<std::string>> out;
    if (!groups_) return out;
    for (const auto& g : *groups_) {
        std::vector<std::string> ls;
        for (int v : g) ls.push_back(labels_[v]);
        out.push_back(std::move(ls));
    }
    return out;
}

void SimplicialComplex::set_groups(const std::vector<std::vector<std::string>>& groups) {
    std::vector<std::vector<int>> idx_groups;
    std::vector<int> owner(labels_.size(), -1);
    for (int gi = 0; gi < static_cast<int>(groups.size()); ++gi) {
        std::vector<int> g;
        for (const auto& l : groups[gi]) {
            auto v = index_of(l);
            if (!v)
                throw ParseError("group vertex '" + l + "' is not in the complex");
            if (owner[*v] != -1)
                throw ParseError("vertex '" + l + "' appears in two groups");
            owner[*v] = gi;
            g.push_back(*v);
        }
        idx_groups.push_back(std::move(g));
    }
    for (int v = 0; v < static_cast<int>(labels_.size()); ++v)
        if (owner[v] == -1)
            throw ParseError("vertex '" + labels_[v] + "' is in no group");
    for (const auto& f : facets_) {
        std::set<int> seen;
        for (int v : f)
            if (!seen.insert(owner[v]).second)
                throw ParseError("facet uses two vertices of one group");
    }
    groups_ = std::move(idx_groups);
}

std::vector<std::vector<int>> SimplicialComplex::all_faces() const {
    std::set<std::vector<int>> faces;
    for (const auto& f : facets_) {
        // every nonempty subset, via bitmask over the facet
        int k = static_cast<int>(f.size());
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> sub;
            for (int b = 0; b < k; ++b)
                if (mask & (1u << b)) sub.push_back(f[b]);
            faces.insert(std::move(sub));
        }
    }
    std::vector<std::vector<int>> out(faces.begin(), faces.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

bool SimplicialComplex::has_face(const std::vector<std::string>& face) const {
    std::vector<int> idx;
    for (const auto& l : face) {
        auto v = index_of(l);
        if (!v) return false;
        idx.push_back(*v);
    }
    std::sort(idx.begin(), idx.end());
    for (const auto& f : facets_)
        if (is_subset(idx, f)) return true;
    return false;
}

// ----- constructions ---------------------------------------------------------

SimplicialComplex skeleton_complex(int m, int n) {
    if (m < 0 || n < 0 || m > n)
        throw ParseError("skeleton_complex requires 0 <= m <= n");
    std::vector<std::string> verts;
    for (int i = 0; i <= n; ++i)
        verts.push_back("v" + std::to_string(i));
    std::vector<std::vector<std::string>> facets;
    // all (m+1)-subsets of {0..n}
    std::vector<int> pick(m + 1);
    for (int i = 0; i <= m; ++i) pick[i] = i;
    while (true) {
        std::vector<std::string> f;
        for (int i : pick) f.push_back(verts[i]);
        facets.push_back(std::move(f));
        int j = m;
        while (j >= 0 && pick[j] == n - m + j) --j;
        if (j < 0) break;
        ++pick[j];
        for (int t = j + 1; t <= m; ++t) pick[t] = pick[t - 1] + 1;
    }
    return SimplicialComplex::from_facets(verts, facets);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.num_vertices() == 0) return b;
    if (b.num_vertices() == 0) return a;

    bool collision = false;
    for (const auto& l : b.vertex_labels())
        if (a.index_of(l)) { collision = true; break; }
    SimplicialComplex ac = collision ? relabeled_complex(a, "l:") : a;
    SimplicialComplex bc = collision ? relabeled_complex(b, "r:") : b;

    std::vector<std::string> verts = ac.vertex_labels();
    verts.insert(verts.end(), bc.vertex_labels().begin(), bc.vertex_labels().end());
    std::vector<std::vector<std::string>> facets;
    for (const auto& fa : ac.facets()) {
        for (const auto& fb : bc.facets()) {
            std::vector<std::string> f;
            for (int v : fa) f.push_back(ac.label(v));
            for (int v : fb) f.push_back(bc.label(v));
            facets.push_back(std::move(f));
        }
    }
    SimplicialComplex out = SimplicialComplex::from_facets(verts, facets);

    // Tentative join structure: each side contributes its groups, a side
    // without groups counting as one group. Kept only if valid on the result.
    std::vector<std::vector<std::string>> groups;
    if (ac.groups())
        for (auto& g : ac.group_labels()) groups.push_back(g);
    else
        groups.push_back(ac.vertex_labels());
    if (bc.groups())
        for (auto& g : bc.group_labels()) groups.push_back(g);
    else
        groups.push_back(bc.vertex_labels());
    try {
        out.set_groups(groups);
    } catch (const ParseError&) {
        // some facet takes two vertices of one group: not a join of points
    }
    return out;
}

SimplicialComplex cone(const SimplicialComplex& base, const std::string& apex_label) {
    if (base.index_of(apex_label))
        throw ParseError("cone apex label '" + apex_label + "' collides with a base vertex");
    SimplicialComplex apex = SimplicialComplex::from_facets({apex_label}, {{apex_label}});
    return join(base, apex);
}

SimplicialComplex vertex_link(const SimplicialComplex& c, const std::string& v) {
    auto vi = c.index_of(v);
    if (!vi)
        throw ParseError("unknown vertex '" + v + "'");
    std::vector<std::vector<std::string>> facets;
    std::set<std::string> verts_seen;
    std::vector<std::string> verts;
    for (const auto& f : c.facets()) {
        if (std::find(f.begin(), f.end(), *vi) == f.end()) continue;
        std::vector<std::string> lf;
        for (int w : f)
            if (w != *vi) lf.push_back(c.label(w));
        for (const auto& l : lf)
            if (verts_seen.insert(l).second) verts.push_back(l);
        if (!lf.empty())
            facets.push_back(std::move(lf));
    }
    SimplicialComplex out = SimplicialComplex::from_facets(verts, facets);
    if (c.groups()) {
        std::vector<std::vector<std::string>> gl;
        for (const auto& g : c.group_labels()) {
            std::vector<std::string> keep;
            for (const auto& l : g)
                if (out.index_of(l)) keep.push_back(l);
            if (!keep.empty()) gl.push_back(std::move(keep));
        }
        out.set_groups(gl); // link faces of valid joins stay valid
    }
    return out;
}

SimplicialComplex relabeled_complex(const SimplicialComplex& c, const std::string& prefix) {
    std::vector<std::string> verts;
    for (const auto& l : c.vertex_labels()) verts.push_back(prefix + l);
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : c.facets()) {
        std::vector<std::string> lf;
        for (int v : f) lf.push_back(prefix + c.label(v));
        facets.push_back(std::move(lf));
    }
    SimplicialComplex out = SimplicialComplex::from_facets(verts, facets);
    if (c.groups()) {
        std::vector<std::vector<std::string>> gl;
        for (const auto& g : c.group_labels()) {
            std::vector<std::string> pg;
            for (const auto& l : g) pg.push_back(prefix + l);
            gl.push_back(std::move(pg));
        }
        out.set_groups(gl);
    }
    return out;
}

SimplicialComplex join_power(const SimplicialComplex& base, int n) {
    if (n < 1)
        throw ParseError("join_power requires n >= 1");
    SimplicialComplex out;
    for (int k = 1; k <= n; ++k) {
        SimplicialComplex copy = relabeled_complex(base, "g" + std::to_string(k) + ":");
        if (!copy.groups()) {
            try {
                copy.set_groups({copy.vertex_labels()});
            } catch (const ParseError&) {
                // base has 1-dimensional facets: not a join factor of points
            }
        }
        out = (k == 1) ? copy : join(out, copy);
    }
    return out;
}

std::vector<long> f_vector(const SimplicialComplex& c) {
    std::vector<long> f(static_cast<std::size_t>(std::max(c.dim() + 1, 0)), 0);
    for (const auto& face : c.all_faces())
        ++f[face.size() - 1];
    return f;
}

bool complexes_equal(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::set<std::string> la(a.vertex_labels().begin(), a.vertex_labels().end());
    std::set<std::string> lb(b.vertex_labels().begin(), b.vertex_labels().end());
    if (la != lb) return false;
    auto facet_labels = [](const SimplicialComplex& c) {
        std::set<std::set<std::string>> out;
        for (const auto& f : c.facets()) {
            std::set<std::string> lf;
            for (int v : f) lf.insert(c.label(v));
            out.insert(std::move(lf));
        }
        return out;
    };
    return facet_labels(a) == facet_labels(b);
}

bool is_full_join(const SimplicialComplex& c) {
    if (!c.groups()) return false;
    const auto& groups = *c.groups();
    long expect = 1;
    for (const auto& g : groups) {
        if (g.empty()) return false;
        expect *= static_cast<long>(g.size());
    }
    if (static_cast<long>(c.facets().size()) != expect) return false;
    for (const auto& f : c.facets())
        if (f.size() != groups.size()) return false;
    // one vertex per group is already a class invariant of set_groups;
    // together with the count, the facets are exactly the transversals
    return true;
}

bool joins_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (!is_full_join(a) || !is_full_join(b)) return false;
    auto sizes = [](const SimplicialComplex& c) {
        std::vector<std::size_t> s;
        for (const auto& g : *c.groups()) s.push_back(g.size());
        std::sort(s.begin(), s.end());
        return s;
    };
    return sizes(a) == sizes(b);
}

SimplicialComplex complex_from_graph(const Graph& g) {
    std::vector<std::vector<std::string>> facets;
    for (auto [u, v] : g.edges())
        facets.push_back({g.label(u), g.label(v)});
    return SimplicialComplex::from_facets(g.labels(), facets);
}

SimplicialComplex triangulated_torus(int p, int q) {
    if (p < 3 || q < 3)
        throw ParseError("triangulated_torus requires p, q >= 3");
    auto name = [](int i, int j) {
        return "t" + std::to_string(i) + "." + std::to_string(j);
    };
    std::vector<std::string> verts;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j)
            verts.push_back(name(i, j));
    std::vector<std::vector<std::string>> facets;
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < q; ++j) {
            int i1 = (i + 1) % p, j1 = (j + 1) % q;
            facets.push_back({name(i, j), name(i1, j), name(i1, j1)});
            facets.push_back({name(i, j), name(i1, j1), name(i, j1)});
        }
    }
    return SimplicialComplex::from_facets(verts, facets);
}

// ----- text format ------------------------------------------------------------

std::string complex_to_text(const SimplicialComplex& c) {
    std::string out;
    if (c.groups()) {
        out += "groups";
        bool first = true;
        for (const auto& g : c.group_labels()) {
            out += first ? " " : " | ";
            first = false;
            for (std::size_t i = 0; i < g.size(); ++i) {
                if (i) out += ' ';
                out += g[i];
            }
        }
        out += '\n';
    }
    for (const auto& f : c.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) out += ' ';
            out += c.label(f[i]);
        }
        out += '\n';
    }
    return out;
}

SimplicialComplex complex_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::optional<std::vector<std::vector<std::string>>> groups;
    std::vector<std::vector<std::string>> facets;
    int lineno = 0;
    bool min_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;
        if (!min_seen && toks[0] == "groups") {
            groups.emplace();
            groups->push_back({});
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (toks[i] == "|")
                    groups->push_back({});
                else
                    groups->back().push_back(toks[i]);
            }
            for (const auto& g : *groups)
                if (g.empty())
                    throw ParseError("line " + std::to_string(lineno) + ": empty group");
            min_seen = true;
            continue;
        }
        min_seen = true;
        facets.push_back(toks);
    }
    std::vector<std::string> verts;
    if (groups) {
        for (const auto& g : *groups)
            verts.insert(verts.end(), g.begin(), g.end());
    }
    SimplicialComplex c = SimplicialComplex::from_facets(verts, facets);
    if (groups)
        c.set_groups(*groups);
    return c;
}

} // namespace prodembed
