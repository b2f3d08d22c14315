#pragma once

#include <optional>
#include <vector>

#include "bfvd/graph.hpp"

namespace bfvd {

struct DegeneracyResult {
    int d = 0;
    std::vector<Vertex> ordering;  // peel order; each vertex has <= d later neighbors
};

/// Repeated minimum-degree removal, ties broken by smallest id.
DegeneracyResult degeneracy(const Graph& g);

struct FeedbackEdges {
    int fen = 0;
    std::vector<Edge> edges;  // non-tree edges of the lowest-id-first BFS forest
};

FeedbackEdges feedback_edge_data(const Graph& g);

struct FvsResult {
    enum class Status { found, budget_exhausted };
    Status status = Status::found;
    VertexSet fvs;  // valid only when status == found

    bool found() const { return status == Status::found; }
};

/// Minimum feedback vertex set by iterative deepening. With a budget, sizes
/// above it are not explored and `budget_exhausted` is reported instead.
FvsResult minimum_fvs(const Graph& g, std::optional<int> budget = std::nullopt);

bool is_forest(const Graph& g);
bool is_feedback_vertex_set(const Graph& g, const VertexSet& d);
bool is_vertex_cover(const Graph& g, const VertexSet& cover);
int count_components(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);

}  // namespace bfvd
