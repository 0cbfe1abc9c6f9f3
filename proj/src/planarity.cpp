#include "prodembed/planarity.hpp"

#include "prodembed/errors.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace prodembed {

namespace {

using Edge = std::pair<int, int>;

Edge norm_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// ----- biconnected blocks (Hopcroft-Tarjan lowpoints) ------------------------

std::vector<std::vector<Edge>> biconnected_blocks(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<std::pair<int, int>>> adj(n); // (neighbor, edge id)
    for (int id = 0; id < static_cast<int>(edges.size()); ++id) {
        auto [u, v] = edges[id];
        adj[u].push_back({v, id});
        adj[v].push_back({u, id});
    }
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> estack;
    std::vector<std::vector<Edge>> blocks;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent_edge) {
        disc[u] = low[u] = timer++;
        for (auto [w, id] : adj[u]) {
            if (id == parent_edge) continue;
            if (disc[w] == -1) {
                estack.push_back(id);
                dfs(w, id);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    std::vector<Edge> blk;
                    while (true) {
                        int eid = estack.back();
                        estack.pop_back();
                        blk.push_back(edges[eid]);
                        if (eid == id) break;
                    }
                    blocks.push_back(std::move(blk));
                }
            } else if (disc[w] < disc[u]) { // back edge, seen once
                estack.push_back(id);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    };
    for (int v = 0; v < n; ++v)
        if (disc[v] == -1) dfs(v, -1);
    return blocks;
}

// ----- DMP face expansion on one 2-connected block ---------------------------

// Fragments relative to the embedded subgraph H: either a chord (single edge
// between embedded vertices) or a connected component of G-V(H) together
// with its attachment vertices.
struct Fragment {
    std::vector<int> attachments;     // embedded vertices, sorted, deduped
    bool chord = false;
    Edge chord_edge{};
    std::vector<int> comp;            // component vertices (non-chord case)
};

bool dmp_planar_block(const std::vector<Edge>& bedges) {
    if (bedges.size() <= 2) return true;

    // Local vertex ids.
    std::vector<int> verts;
    for (auto [u, v] : bedges) {
        verts.push_back(u);
        verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::map<int, int> vmap;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        vmap[verts[i]] = i;

    const int V = static_cast<int>(verts.size());
    const int E = static_cast<int>(bedges.size());
    if (E > 3 * V - 6) return false;

    std::vector<std::vector<int>> adj(V);
    std::set<Edge> block_edges;
    for (auto [gu, gv] : bedges) {
        int u = vmap[gu], v = vmap[gv];
        adj[u].push_back(v);
        adj[v].push_back(u);
        block_edges.insert(norm_edge(u, v));
    }

    // Seed cycle: BFS tree plus any non-tree edge.
    std::vector<int> parent(V, -1), depth(V, -1);
    std::queue<int> q;
    q.push(0);
    depth[0] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj[u]) {
            if (depth[w] == -1) {
                depth[w] = depth[u] + 1;
                parent[w] = u;
                q.push(w);
            }
        }
    }
    int cu = -1, cw = -1;
    for (auto [gu, gv] : bedges) {
        int u = vmap[gu], v = vmap[gv];
        if (parent[u] != v && parent[v] != u) {
            cu = u;
            cw = v;
            break;
        }
    }
    assert(cu >= 0 && "2-connected block with >=3 edges has a cycle");
    std::vector<int> up_u, up_w;
    {
        int a = cu, b = cw;
        while (depth[a] > depth[b]) { up_u.push_back(a); a = parent[a]; }
        while (depth[b] > depth[a]) { up_w.push_back(b); b = parent[b]; }
        while (a != b) {
            up_u.push_back(a);
            up_w.push_back(b);
            a = parent[a];
            b = parent[b];
        }
        up_u.push_back(a); // lca
    }
    std::vector<int> cycle = up_u;
    cycle.insert(cycle.end(), up_w.rbegin(), up_w.rend());

    std::vector<std::vector<int>> faces;
    faces.push_back(cycle);
    faces.push_back({cycle.rbegin(), cycle.rend()});

    std::set<Edge> embedded;
    std::vector<char> in_h(V, 0);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        in_h[cycle[i]] = 1;
        embedded.insert(norm_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
    }

    while (true) {
        // --- fragments ---
        std::vector<Fragment> frags;
        for (const Edge& e : block_edges) {
            if (embedded.count(e)) continue;
            if (in_h[e.first] && in_h[e.second]) {
                Fragment f;
                f.chord = true;
                f.chord_edge = e;
                f.attachments = {e.first, e.second};
                std::sort(f.attachments.begin(), f.attachments.end());
                frags.push_back(std::move(f));
            }
        }
        {
            std::vector<char> seen(V, 0);
            for (int s = 0; s < V; ++s) {
                if (in_h[s] || seen[s]) continue;
                Fragment f;
                std::vector<int> stack{s};
                seen[s] = 1;
                std::set<int> att;
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    f.comp.push_back(v);
                    for (int w : adj[v]) {
                        if (in_h[w]) {
                            att.insert(w);
                        } else if (!seen[w]) {
                            seen[w] = 1;
                            stack.push_back(w);
                        }
                    }
                }
                f.attachments.assign(att.begin(), att.end());
                assert(f.attachments.size() >= 2 && "block is 2-connected");
                frags.push_back(std::move(f));
            }
        }
        if (frags.empty()) return true; // everything embedded

        // --- admissible faces ---
        std::vector<std::set<int>> face_sets;
        for (const auto& f : faces)
            face_sets.emplace_back(f.begin(), f.end());

        std::vector<std::vector<int>> admissible(frags.size());
        int pick = -1;
        for (std::size_t i = 0; i < frags.size(); ++i) {
            for (std::size_t fi = 0; fi < faces.size(); ++fi) {
                bool ok = true;
                for (int a : frags[i].attachments)
                    if (!face_sets[fi].count(a)) { ok = false; break; }
                if (ok) admissible[i].push_back(static_cast<int>(fi));
            }
            if (admissible[i].empty()) return false; // stuck fragment
            if (admissible[i].size() == 1 && pick < 0) pick = static_cast<int>(i);
        }
        if (pick < 0) pick = 0;
        const Fragment& fr = frags[pick];
        int face_idx = admissible[pick][0];

        // --- alpha path through the fragment ---
        std::vector<int> path;
        if (fr.chord) {
            path = {fr.chord_edge.first, fr.chord_edge.second};
        } else {
            std::set<int> comp_set(fr.comp.begin(), fr.comp.end());
            int start = fr.attachments[0];
            std::map<int, int> par;
            std::queue<int> bq;
            int found = -1;
            for (int w : adj[start]) {
                if (comp_set.count(w) && !par.count(w)) {
                    par[w] = start;
                    bq.push(w);
                }
            }
            while (!bq.empty() && found < 0) {
                int v = bq.front();
                bq.pop();
                for (int w : adj[v]) {
                    if (in_h[w]) {
                        if (w != start) {
                            par[w] = v;
                            found = w;
                            break;
                        }
                    } else if (comp_set.count(w) && !par.count(w)) {
                        par[w] = v;
                        bq.push(w);
                    }
                }
            }
            assert(found >= 0 && "component fragment reaches a second attachment");
            for (int v = found; v != start; v = par[v])
                path.push_back(v);
            path.push_back(start);
            std::reverse(path.begin(), path.end());
        }

        // --- embed the path, split the face ---
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            embedded.insert(norm_edge(path[i], path[i + 1]));
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            in_h[path[i]] = 1;

        const std::vector<int> face = faces[face_idx];
        int a = path.front(), b = path.back();
        int ia = -1, ib = -1;
        for (int i = 0; i < static_cast<int>(face.size()); ++i) {
            if (face[i] == a) ia = i;
            if (face[i] == b) ib = i;
        }
        assert(ia >= 0 && ib >= 0 && ia != ib);
        auto arc = [&](int from, int to) {
            std::vector<int> out;
            for (int i = from;; i = (i + 1) % static_cast<int>(face.size())) {
                out.push_back(face[i]);
                if (i == to) break;
            }
            return out;
        };
        std::vector<int> f1 = arc(ia, ib); // a .. b along the face
        for (int i = static_cast<int>(path.size()) - 2; i >= 1; --i)
            f1.push_back(path[i]);
        std::vector<int> f2 = arc(ib, ia); // b .. a along the face
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            f2.push_back(path[i]);
        faces[face_idx] = std::move(f1);
        faces.push_back(std::move(f2));
    }
}

bool planar_edge_set(int n, const std::vector<Edge>& edges) {
    for (const auto& blk : biconnected_blocks(n, edges))
        if (!dmp_planar_block(blk)) return false;
    return true;
}

// ----- witness extraction -----------------------------------------------------

// Walk a subdivision path away from branch vertex b through degree-2 interior
// vertices until the next branch vertex.
std::vector<int> walk_path(const std::vector<std::vector<int>>& adj,
                           const std::vector<int>& deg, int b, int first) {
    std::vector<int> seq{b, first};
    int prev = b, cur = first;
    while (deg[cur] == 2) {
        int nxt = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
        seq.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    return seq;
}

KuratowskiWitness extract_witness(const Graph& g, const std::vector<Edge>& minimal) {
    int n = g.num_vertices();
    std::vector<std::vector<int>> adj(n);
    std::vector<int> deg(n, 0);
    for (auto [u, v] : minimal) {
        adj[u].push_back(v);
        adj[v].push_back(u);
        ++deg[u];
        ++deg[v];
    }
    std::vector<int> branch;
    for (int v = 0; v < n; ++v)
        if (deg[v] >= 3) branch.push_back(v);

    std::set<std::vector<int>> canon;
    for (int b : branch) {
        for (int first : adj[b]) {
            auto seq = walk_path(adj, deg, b, first);
            std::vector<int> rev(seq.rbegin(), seq.rend());
            canon.insert(std::min(seq, rev));
        }
    }

    KuratowskiKind kind;
    if (branch.size() == 5 &&
        std::all_of(branch.begin(), branch.end(), [&](int v) { return deg[v] == 4; }) &&
        canon.size() == 10) {
        kind = KuratowskiKind::K5;
    } else if (branch.size() == 6 &&
               std::all_of(branch.begin(), branch.end(), [&](int v) { return deg[v] == 3; }) &&
               canon.size() == 9) {
        kind = KuratowskiKind::K33;
    } else {
        throw std::logic_error("edge-minimal nonplanar remainder is not a Kuratowski subdivision");
    }

    KuratowskiWitness w;
    w.kind = kind;
    for (int v : branch)
        w.branch_vertices.push_back(g.label(v));
    for (const auto& seq : canon) {
        std::vector<std::string> labels;
        for (int v : seq)
            labels.push_back(g.label(v));
        w.paths.push_back(std::move(labels));
    }
    return w;
}

} // namespace

PlanarityResult is_planar(const Graph& g) {
    std::vector<Edge> edges = g.edges();
    if (planar_edge_set(g.num_vertices(), edges))
        return {true, std::nullopt};

    // Delete edges while nonplanarity persists; one pass suffices because a
    // subgraph of a planar graph is planar, so a kept edge never becomes
    // deletable later.
    std::size_t i = 0;
    while (i < edges.size()) {
        std::vector<Edge> trial = edges;
        trial.erase(trial.begin() + static_cast<long>(i));
        if (!planar_edge_set(g.num_vertices(), trial))
            edges = std::move(trial);
        else
            ++i;
    }
    return {false, extract_witness(g, edges)};
}

std::optional<std::string> check_kuratowski_witness(const Graph& g,
                                                    const KuratowskiWitness& w) {
    const std::size_t want_branch = (w.kind == KuratowskiKind::K5) ? 5 : 6;
    const std::size_t want_paths = (w.kind == KuratowskiKind::K5) ? 10 : 9;
    if (w.branch_vertices.size() != want_branch)
        return "wrong branch vertex count";
    if (w.paths.size() != want_paths)
        return "wrong path count";

    std::set<std::string> branch(w.branch_vertices.begin(), w.branch_vertices.end());
    if (branch.size() != want_branch)
        return "repeated branch vertex";
    for (const auto& b : branch)
        if (!g.index_of(b))
            return "branch vertex '" + b + "' not in graph";

    std::set<std::string> interior_seen;
    std::map<std::pair<std::string, std::string>, int> pair_count;
    for (const auto& p : w.paths) {
        if (p.size() < 2)
            return "path with fewer than 2 vertices";
        if (!branch.count(p.front()) || !branch.count(p.back()))
            return "path endpoint is not a branch vertex";
        if (p.front() == p.back())
            return "path is a closed loop";
        std::set<std::string> in_path;
        for (const auto& v : p)
            if (!in_path.insert(v).second)
                return "path repeats vertex '" + v + "'";
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            auto a = g.index_of(p[i]), b = g.index_of(p[i + 1]);
            if (!a || !b || !g.has_edge(*a, *b))
                return "path step '" + p[i] + " " + p[i + 1] + "' is not an edge of the graph";
        }
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            if (branch.count(p[i]))
                return "branch vertex '" + p[i] + "' interior to a path";
            if (!interior_seen.insert(p[i]).second)
                return "interior vertex '" + p[i] + "' shared by two paths";
        }
        auto key = std::minmax(p.front(), p.back());
        ++pair_count[{key.first, key.second}];
    }

    // Contracted multigraph must be exactly K5 or K33.
    for (const auto& [key, cnt] : pair_count)
        if (cnt > 1)
            return "two paths join '" + key.first + "' and '" + key.second + "'";

    std::vector<std::string> bl(branch.begin(), branch.end());
    if (w.kind == KuratowskiKind::K5) {
        if (pair_count.size() != 10)
            return "contracted graph is not K5";
        return std::nullopt; // 10 distinct pairs over 5 vertices is all of them
    }

    // K33: 3-regular and complete bipartite.
    std::map<std::string, std::set<std::string>> nb;
    for (const auto& [key, cnt] : pair_count) {
        nb[key.first].insert(key.second);
        nb[key.second].insert(key.first);
    }
    for (const auto& b : bl)
        if (nb[b].size() != 3)
            return "contracted graph is not 3-regular";
    std::vector<std::string> part_a{bl[0]};
    for (const auto& b : bl)
        if (b != bl[0] && !nb[bl[0]].count(b))
            part_a.push_back(b);
    if (part_a.size() != 3)
        return "contracted graph is not bipartite 3+3";
    std::set<std::string> aset(part_a.begin(), part_a.end());
    for (const auto& b : bl) {
        bool in_a = aset.count(b) > 0;
        for (const auto& c : nb[b]) {
            if (aset.count(c) == in_a)
                return "contracted graph is not complete bipartite";
        }
    }
    return std::nullopt;
}

} // namespace prodembed
