#pragma once

#include <stdexcept>
#include <string>

namespace prodembed {

// Input text (graph files, complex files) that fails to parse. Messages carry
// 1-based line numbers where applicable.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input outside the hypotheses of the dimension formula (e.g. disconnected
// factor, no branching factor at all).
struct HypothesisError : std::runtime_error {
    explicit HypothesisError(const std::string& msg) : std::runtime_error(msg) {}
};

// A geometric predicate hit a non-generic configuration (singular system,
// intersection on a simplex boundary). Callers retry with fresh coordinates.
struct DegeneracyError : std::runtime_error {
    explicit DegeneracyError(const std::string& msg) : std::runtime_error(msg) {}
};

// A point tuple that must span a simplex is affinely dependent.
struct AffineDependenceError : std::runtime_error {
    explicit AffineDependenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Boundaries of the two chains in a parity computation touch; the mod-2
// count is undefined in that case, so it is an error, not a degeneracy.
struct BoundaryCollisionError : std::runtime_error {
    explicit BoundaryCollisionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Resampling loops (random embeddings, apex fallbacks) exhausted their budget.
struct ResampleBudgetError : std::runtime_error {
    explicit ResampleBudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// A piecewise-linear map description is internally inconsistent (arc endpoints
// disagree with vertex images, arc steps are not edges of the target, ...).
struct MapDefinitionError : std::runtime_error {
    explicit MapDefinitionError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace prodembed
