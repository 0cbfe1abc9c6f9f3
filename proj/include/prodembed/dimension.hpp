#pragma once

// Factor classification and the minimal Euclidean embedding dimension of a
// product of graphs.
//
// Normal form of a factor list: points are dropped (they do not change the
// product), intervals are counted (i), circles are counted (s), and the
// remaining factors must all have a vertex of degree >= 3 ("branched"
// factors, n of them). For n >= 1 the minimal dimension is
//
//     d = 2n + s + i          if i > 0 or some branched factor is planar,
//     d = 2n + s + 1          otherwise (all branched factors nonplanar, i = 0).

#include "prodembed/graph.hpp"

#include <string>
#include <vector>

namespace prodembed {

enum class FactorKind { Point, Interval, Circle, Branched };

struct FactorClass {
    FactorKind kind = FactorKind::Point;
    bool planar = true; // meaningful for every kind; Point/Interval/Circle are planar
};

// Throws HypothesisError if the factor is empty or disconnected.
FactorClass classify_factor(const Graph& g);

struct DimensionResult {
    int n = 0;        // branched factors
    int s = 0;        // circle factors
    int i = 0;        // interval factors
    int formula_case = 0; // 1: 2n+s+i, 2: 2n+s+1
    int dim = 0;
};

// Factors as graphs, plus extra circle/interval multiplicities (the CLI's
// --circles/--intervals). Throws HypothesisError when no branched factor
// remains after normalization (the formula requires n >= 1).
DimensionResult min_embedding_dim(const std::vector<Graph>& factors,
                                  int extra_circles = 0, int extra_intervals = 0);

std::string factor_kind_name(FactorKind k);

} // namespace prodembed
