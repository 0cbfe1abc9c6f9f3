#include "prodembed/almost_embedding.hpp"

#include "prodembed/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace prodembed {

namespace {

std::string vertex_cell(const Graph& g, int v) {
    return "vertex " + g.label(v);
}

std::string edge_cell(const Graph& g, int e) {
    auto [u, v] = g.edges()[e];
    return "edge " + g.label(u) + "-" + g.label(v);
}

// Vertex set of the closed image of each cell: a vertex image for vertices,
// the arc's vertices for edges.
std::vector<std::set<int>> vertex_image_sets(const GraphMapInstance& inst) {
    std::vector<std::set<int>> out;
    for (int v = 0; v < inst.source.num_vertices(); ++v)
        out.push_back({inst.vertex_image[v]});
    for (const auto& arc : inst.edge_arcs)
        out.emplace_back(arc.begin(), arc.end());
    return out;
}

// Closed cells of a graph: vertices first, then edges; cells_disjoint is the
// vertex-set test on the source side.
struct Cells {
    const Graph& g;
    int count() const { return g.num_vertices() + g.num_edges(); }
    std::set<int> closure(int c) const {
        if (c < g.num_vertices()) return {c};
        auto [u, v] = g.edges()[c - g.num_vertices()];
        return {u, v};
    }
    std::string name(int c) const {
        return c < g.num_vertices() ? vertex_cell(g, c) : edge_cell(g, c - g.num_vertices());
    }
};

bool sets_meet(const std::set<int>& a, const std::set<int>& b) {
    for (int x : a)
        if (b.count(x)) return true;
    return false;
}

} // namespace

void validate_graph_map(const GraphMapInstance& inst) {
    if (static_cast<int>(inst.vertex_image.size()) != inst.source.num_vertices())
        throw MapDefinitionError("vertex image count differs from the source order");
    if (static_cast<int>(inst.edge_arcs.size()) != inst.source.num_edges())
        throw MapDefinitionError("arc count differs from the source edge count");
    for (int img : inst.vertex_image)
        if (img < 0 || img >= inst.target.num_vertices())
            throw MapDefinitionError("vertex image outside the target");
    for (int e = 0; e < inst.source.num_edges(); ++e) {
        const auto& arc = inst.edge_arcs[e];
        auto [u, v] = inst.source.edges()[e];
        if (arc.size() < 2)
            throw MapDefinitionError(edge_cell(inst.source, e) + ": arc too short");
        if (arc.front() != inst.vertex_image[u] || arc.back() != inst.vertex_image[v])
            throw MapDefinitionError(edge_cell(inst.source, e) +
                                     ": arc endpoints disagree with the vertex images");
        std::set<int> seen;
        for (int w : arc) {
            if (w < 0 || w >= inst.target.num_vertices())
                throw MapDefinitionError(edge_cell(inst.source, e) + ": arc leaves the target");
            if (!seen.insert(w).second)
                throw MapDefinitionError(edge_cell(inst.source, e) + ": arc repeats a vertex");
        }
        for (std::size_t i = 0; i + 1 < arc.size(); ++i)
            if (!inst.target.has_edge(arc[i], arc[i + 1]))
                throw MapDefinitionError(edge_cell(inst.source, e) +
                                         ": arc step is not a target edge");
    }
}

CheckResult almost_embedding_check(const GraphMapInstance& inst) {
    validate_graph_map(inst);
    Cells cells{inst.source};
    auto images = vertex_image_sets(inst);
    CheckResult res;
    for (int a = 0; a < cells.count(); ++a) {
        for (int b = a + 1; b < cells.count(); ++b) {
            if (sets_meet(cells.closure(a), cells.closure(b))) continue;
            if (sets_meet(images[a], images[b])) {
                res.ok = false;
                res.cell_a = cells.name(a);
                res.cell_b = cells.name(b);
                res.reason = "images share a target vertex";
                return res;
            }
        }
    }
    return res;
}

void validate_geometric_map(const GeometricGraphInstance& inst) {
    if (static_cast<int>(inst.vertex_image.size()) != inst.source.num_vertices())
        throw MapDefinitionError("vertex image count differs from the source order");
    if (static_cast<int>(inst.edge_polylines.size()) != inst.source.num_edges())
        throw MapDefinitionError("polyline count differs from the source edge count");
    for (const auto& p : inst.vertex_image)
        if (static_cast<int>(p.size()) != inst.ambient_dim)
            throw MapDefinitionError("vertex image dimension mismatch");
    for (int e = 0; e < inst.source.num_edges(); ++e) {
        const auto& line = inst.edge_polylines[e];
        auto [u, v] = inst.source.edges()[e];
        if (line.size() < 2)
            throw MapDefinitionError(edge_cell(inst.source, e) + ": polyline too short");
        for (const auto& p : line)
            if (static_cast<int>(p.size()) != inst.ambient_dim)
                throw MapDefinitionError(edge_cell(inst.source, e) + ": point dimension mismatch");
        if (line.front() != inst.vertex_image[u] || line.back() != inst.vertex_image[v])
            throw MapDefinitionError(edge_cell(inst.source, e) +
                                     ": polyline ends disagree with the vertex images");
    }
}

CheckResult almost_embedding_check(const GeometricGraphInstance& inst) {
    validate_geometric_map(inst);
    const Graph& g = inst.source;
    CheckResult res;
    auto fail = [&](const std::string& a, const std::string& b, const std::string& why) {
        res.ok = false;
        res.cell_a = a;
        res.cell_b = b;
        res.reason = why;
        return res;
    };

    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v = u + 1; v < g.num_vertices(); ++v)
            if (inst.vertex_image[u] == inst.vertex_image[v])
                return fail(vertex_cell(g, u), vertex_cell(g, v), "images coincide");

    for (int v = 0; v < g.num_vertices(); ++v) {
        for (int e = 0; e < g.num_edges(); ++e) {
            auto [a, b] = g.edges()[e];
            if (v == a || v == b) continue;
            const auto& line = inst.edge_polylines[e];
            for (std::size_t i = 0; i + 1 < line.size(); ++i)
                if (point_on_segment(inst.vertex_image[v], line[i], line[i + 1]))
                    return fail(vertex_cell(g, v), edge_cell(g, e), "vertex image on the arc");
        }
    }

    for (int e = 0; e < g.num_edges(); ++e) {
        for (int f = e + 1; f < g.num_edges(); ++f) {
            auto [a, b] = g.edges()[e];
            auto [c, d] = g.edges()[f];
            if (a == c || a == d || b == c || b == d) continue;
            const auto &le = inst.edge_polylines[e], &lf = inst.edge_polylines[f];
            for (std::size_t i = 0; i + 1 < le.size(); ++i)
                for (std::size_t j = 0; j + 1 < lf.size(); ++j)
                    if (segments_intersect(le[i], le[i + 1], lf[j], lf[j + 1]))
                        return fail(edge_cell(g, e), edge_cell(g, f), "arcs intersect");
        }
    }
    return res;
}

GraphMapInstance identity_instance(const Graph& g) {
    GraphMapInstance inst;
    inst.source = g;
    inst.target = g;
    for (int v = 0; v < g.num_vertices(); ++v)
        inst.vertex_image.push_back(v);
    for (auto [u, v] : g.edges())
        inst.edge_arcs.push_back({u, v});
    return inst;
}

GraphMapInstance subdivision_instance(const Graph& g) {
    GraphMapInstance inst;
    inst.source = g;
    inst.target = subdivide_all_edges(g);
    for (int v = 0; v < g.num_vertices(); ++v)
        inst.vertex_image.push_back(*inst.target.index_of(g.label(v)));
    for (auto [u, v] : g.edges()) {
        std::string mid = g.label(u) + "." + g.label(v) + ".m";
        inst.edge_arcs.push_back({*inst.target.index_of(g.label(u)),
                                  *inst.target.index_of(mid),
                                  *inst.target.index_of(g.label(v))});
    }
    return inst;
}

namespace {

// Shortest arc by breadth-first search, neighbors in label order: among the
// shortest walks this picks the lexicographically least vertex sequence.
std::vector<int> shortest_arc(const Graph& g, int from, int to) {
    std::vector<int> parent(g.num_vertices(), -1);
    parent[from] = from;
    std::deque<int> queue{from};
    while (!queue.empty()) {
        int at = queue.front();
        queue.pop_front();
        if (at == to) break;
        std::vector<int> nbrs = g.neighbors(at);
        std::sort(nbrs.begin(), nbrs.end(),
                  [&](int a, int b) { return g.label(a) < g.label(b); });
        for (int w : nbrs) {
            if (parent[w] != -1) continue;
            parent[w] = at;
            queue.push_back(w);
        }
    }
    if (parent[to] == -1)
        throw MapDefinitionError("target is disconnected between arc endpoints");
    std::vector<int> arc{to};
    while (arc.back() != from)
        arc.push_back(parent[arc.back()]);
    std::reverse(arc.begin(), arc.end());
    return arc;
}

} // namespace

GraphMapInstance k5_into_k33_map() {
    GraphMapInstance inst;
    inst.source = complete_graph(5);
    inst.target = complete_bipartite_graph(3, 3).subdivided_edge("a1", "b1", "m");
    auto at = [&](const std::string& l) { return *inst.target.index_of(l); };
    inst.vertex_image = {at("m"), at("a2"), at("a3"), at("b2"), at("b3")};
    for (auto [u, v] : inst.source.edges())
        inst.edge_arcs.push_back(
            shortest_arc(inst.target, inst.vertex_image[u], inst.vertex_image[v]));
    return inst;
}

CheckResult product_almost_embedding_check(const GraphMapInstance& f,
                                           const GraphMapInstance& g) {
    validate_graph_map(f);
    validate_graph_map(g);
    Cells cf{f.source}, cg{g.source};
    auto imf = vertex_image_sets(f), img = vertex_image_sets(g);

    CheckResult res;
    for (int a1 = 0; a1 < cf.count(); ++a1) {
        for (int a2 = 0; a2 < cg.count(); ++a2) {
            for (int b1 = 0; b1 < cf.count(); ++b1) {
                for (int b2 = 0; b2 < cg.count(); ++b2) {
                    if (a1 * cg.count() + a2 >= b1 * cg.count() + b2) continue; // unordered
                    bool disjoint = !sets_meet(cf.closure(a1), cf.closure(b1)) ||
                                    !sets_meet(cg.closure(a2), cg.closure(b2));
                    if (!disjoint) continue;
                    if (sets_meet(imf[a1], imf[b1]) && sets_meet(img[a2], img[b2])) {
                        res.ok = false;
                        res.cell_a = cf.name(a1) + " x " + cg.name(a2);
                        res.cell_b = cf.name(b1) + " x " + cg.name(b2);
                        res.reason = "product images meet in both components";
                        return res;
                    }
                }
            }
        }
    }
    return res;
}

GeometricGraphInstance compose_with_embedding(const GraphMapInstance& inst,
                                              const GeometricComplex& target_embedding) {
    validate_graph_map(inst);
    GeometricGraphInstance out;
    out.source = inst.source;
    out.ambient_dim = target_embedding.ambient_dim;
    std::vector<RationalPoint> target_coords(inst.target.num_vertices());
    for (int t = 0; t < inst.target.num_vertices(); ++t) {
        auto i = target_embedding.complex.index_of(inst.target.label(t));
        if (!i)
            throw MapDefinitionError("embedding lacks target vertex '" +
                                     inst.target.label(t) + "'");
        target_coords[t] = target_embedding.coords[*i];
    }
    for (int img : inst.vertex_image)
        out.vertex_image.push_back(target_coords[img]);
    for (const auto& arc : inst.edge_arcs) {
        std::vector<RationalPoint> line;
        for (int w : arc)
            line.push_back(target_coords[w]);
        out.edge_polylines.push_back(std::move(line));
    }
    return out;
}

GeometricGraphInstance geometric_instance_from_embedding(const Graph& g,
                                                         const GeometricComplex& embedding) {
    return compose_with_embedding(identity_instance(g), embedding);
}

} // namespace prodembed
