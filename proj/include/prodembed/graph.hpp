#pragma once

// Finite simple graphs with string vertex labels. Graphs enter the toolkit
// either as named builtins ("k5", "cycle:6", ...) or as whitespace edge
// lists; see parse_graph.

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace prodembed {

class Graph {
public:
    Graph() = default;

    // Validates: labels unique and nonempty, endpoints declared, no loops,
    // no duplicate edges. Throws ParseError on violation.
    static Graph from_edges(const std::vector<std::string>& vertices,
                            const std::vector<std::pair<std::string, std::string>>& edges);

    int num_vertices() const { return static_cast<int>(labels_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> index_of(const std::string& label) const;

    // Edges as index pairs with first < second, in insertion order.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    bool is_connected() const;
    std::vector<std::vector<int>> components() const;

    // Copy with vertex u-v replaced by u-m-v (m a fresh label).
    Graph subdivided_edge(const std::string& u, const std::string& v,
                          const std::string& mid) const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// ----- builtins -------------------------------------------------------------

Graph complete_graph(int n);                // labels v1..vn
Graph complete_bipartite_graph(int p, int q); // labels a1..ap, b1..bq
Graph cycle_graph(int n);                   // labels c1..cn, n >= 3
Graph path_graph(int n);                    // labels p1..pn (n == 1: a point)
Graph triod_graph();                        // star with 3 legs: o-a, o-b, o-c

// ----- parsing --------------------------------------------------------------

// Accepts either a builtin name (k5, k33, kn:N, knn:N, cycle:N, path:N,
// triod; case-insensitive) or edge-list text: one edge "u v" per line,
// '#' starts a comment, blank lines ignored. Throws ParseError with a
// 1-based line number for malformed lines, loops and duplicate edges.
Graph parse_graph(const std::string& source);

// Every edge subdivided once; the new vertex on edge u-v is labeled
// "u.v.m" (endpoint labels in input order).
Graph subdivide_all_edges(const Graph& g);

// Same graph with permuted labels; mapping must be a bijection on labels.
Graph relabeled(const Graph& g, const std::unordered_map<std::string, std::string>& map);

} // namespace prodembed
