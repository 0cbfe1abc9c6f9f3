#include "prodembed/graph.hpp"

#include "prodembed/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace prodembed {

Graph Graph::from_edges(const std::vector<std::string>& vertices,
                        const std::vector<std::pair<std::string, std::string>>& edges) {
    Graph g;
    for (const auto& v : vertices) {
        if (v.empty())
            throw ParseError("empty vertex label");
        if (g.index_.count(v))
            throw ParseError("duplicate vertex label '" + v + "'");
        g.index_[v] = static_cast<int>(g.labels_.size());
        g.labels_.push_back(v);
    }
    g.adj_.resize(g.labels_.size());
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : edges) {
        auto ia = g.index_.find(a);
        auto ib = g.index_.find(b);
        if (ia == g.index_.end())
            throw ParseError("edge endpoint '" + a + "' is not a declared vertex");
        if (ib == g.index_.end())
            throw ParseError("edge endpoint '" + b + "' is not a declared vertex");
        int u = ia->second, v = ib->second;
        if (u == v)
            throw ParseError("loop at vertex '" + a + "'");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw ParseError("duplicate edge '" + a + " " + b + "'");
        g.edges_.push_back({u, v});
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    return g;
}

std::optional<int> Graph::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool Graph::has_edge(int u, int v) const {
    const auto& n = adj_[u];
    return std::find(n.begin(), n.end(), v) != n.end();
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(labels_.size(), 0);
    for (int s = 0; s < num_vertices(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj_[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::is_connected() const {
    return num_vertices() > 0 && components().size() == 1;
}

Graph Graph::subdivided_edge(const std::string& u, const std::string& v,
                             const std::string& mid) const {
    std::vector<std::string> verts = labels_;
    verts.push_back(mid);
    std::vector<std::pair<std::string, std::string>> es;
    bool replaced = false;
    for (auto [a, b] : edges_) {
        const std::string &la = labels_[a], &lb = labels_[b];
        bool match = (la == u && lb == v) || (la == v && lb == u);
        if (match) {
            es.push_back({u, mid});
            es.push_back({mid, v});
            replaced = true;
        } else {
            es.push_back({la, lb});
        }
    }
    if (!replaced)
        throw ParseError("no edge '" + u + " " + v + "' to subdivide");
    return from_edges(verts, es);
}

// ----- builtins -------------------------------------------------------------

namespace {

std::vector<std::string> numbered(const std::string& prefix, int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i)
        out.push_back(prefix + std::to_string(i));
    return out;
}

} // namespace

Graph complete_graph(int n) {
    if (n < 1) throw ParseError("kn:N requires N >= 1");
    auto verts = numbered("v", n);
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            es.push_back({verts[i], verts[j]});
    return Graph::from_edges(verts, es);
}

Graph complete_bipartite_graph(int p, int q) {
    if (p < 1 || q < 1) throw ParseError("complete bipartite graph needs both parts nonempty");
    auto as = numbered("a", p);
    auto bs = numbered("b", q);
    std::vector<std::string> verts = as;
    verts.insert(verts.end(), bs.begin(), bs.end());
    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& a : as)
        for (const auto& b : bs)
            es.push_back({a, b});
    return Graph::from_edges(verts, es);
}

Graph cycle_graph(int n) {
    if (n < 3) throw ParseError("cycle:N requires N >= 3");
    auto verts = numbered("c", n);
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 0; i < n; ++i)
        es.push_back({verts[i], verts[(i + 1) % n]});
    return Graph::from_edges(verts, es);
}

Graph path_graph(int n) {
    if (n < 1) throw ParseError("path:N requires N >= 1");
    auto verts = numbered("p", n);
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 0; i + 1 < n; ++i)
        es.push_back({verts[i], verts[i + 1]});
    return Graph::from_edges(verts, es);
}

Graph triod_graph() {
    return Graph::from_edges({"o", "a", "b", "c"}, {{"o", "a"}, {"o", "b"}, {"o", "c"}});
}

// ----- parsing --------------------------------------------------------------

namespace {

std::string lower(std::string s) {
    for (char& c : s)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

// "kn:7" -> 7; rejects junk and absurd sizes.
int parse_builtin_count(const std::string& name, const std::string& arg) {
    if (arg.empty() || arg.size() > 6 ||
        !std::all_of(arg.begin(), arg.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError("malformed builtin '" + name + ":" + arg + "'");
    return std::stoi(arg);
}

std::optional<Graph> try_builtin(const std::string& token) {
    std::string t = lower(token);
    if (t == "k5") return complete_graph(5);
    if (t == "k33") return complete_bipartite_graph(3, 3);
    if (t == "triod") return triod_graph();
    auto colon = t.find(':');
    if (colon == std::string::npos) return std::nullopt;
    std::string head = t.substr(0, colon), arg = t.substr(colon + 1);
    if (head == "kn") return complete_graph(parse_builtin_count(head, arg));
    if (head == "knn") {
        int n = parse_builtin_count(head, arg);
        return complete_bipartite_graph(n, n);
    }
    if (head == "cycle") return cycle_graph(parse_builtin_count(head, arg));
    if (head == "path") return path_graph(parse_builtin_count(head, arg));
    return std::nullopt;
}

} // namespace

Graph parse_graph(const std::string& source) {
    // A builtin is a single token with no newline.
    {
        std::string t = source;
        auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
        while (!t.empty() && is_space(t.front())) t.erase(t.begin());
        while (!t.empty() && is_space(t.back())) t.pop_back();
        if (!t.empty() && t.find_first_of(" \t\r\n#") == std::string::npos) {
            if (auto g = try_builtin(t)) return *g;
        }
    }

    std::vector<std::string> vertex_order;
    std::set<std::string> vertex_seen;
    std::vector<std::pair<std::string, std::string>> edges;
    std::set<std::pair<std::string, std::string>> edge_seen;

    std::istringstream in(source);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok)
            toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks.size() != 2)
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected 'u v', got " + std::to_string(toks.size()) + " tokens");
        if (toks[0] == toks[1])
            throw ParseError("line " + std::to_string(lineno) + ": loop at '" + toks[0] + "'");
        auto key = std::minmax(toks[0], toks[1]);
        if (!edge_seen.insert({key.first, key.second}).second)
            throw ParseError("line " + std::to_string(lineno) + ": duplicate edge '" +
                             toks[0] + " " + toks[1] + "'");
        for (const auto& v : {toks[0], toks[1]}) {
            if (vertex_seen.insert(v).second)
                vertex_order.push_back(v);
        }
        edges.push_back({toks[0], toks[1]});
    }
    return Graph::from_edges(vertex_order, edges);
}

Graph subdivide_all_edges(const Graph& g) {
    std::vector<std::string> verts = g.labels();
    std::vector<std::pair<std::string, std::string>> es;
    for (auto [u, v] : g.edges()) {
        std::string mid = g.label(u) + "." + g.label(v) + ".m";
        verts.push_back(mid);
        es.push_back({g.label(u), mid});
        es.push_back({mid, g.label(v)});
    }
    return Graph::from_edges(verts, es);
}

Graph relabeled(const Graph& g, const std::unordered_map<std::string, std::string>& map) {
    auto img = [&](const std::string& l) {
        auto it = map.find(l);
        if (it == map.end())
            throw ParseError("relabeling misses vertex '" + l + "'");
        return it->second;
    };
    std::vector<std::string> verts;
    for (const auto& l : g.labels())
        verts.push_back(img(l));
    std::vector<std::pair<std::string, std::string>> es;
    for (auto [u, v] : g.edges())
        es.push_back({img(g.label(u)), img(g.label(v))});
    return Graph::from_edges(verts, es);
}

} // namespace prodembed
