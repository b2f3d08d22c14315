#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace bfvd {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;  // always stored with first < second
using VertexSet = std::vector<Vertex>;   // sorted, duplicate-free

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Simple undirected graph over positive vertex ids. Ids are stable: removing a
/// vertex never renumbers the others. Neighbor lists are kept sorted.
class Graph {
public:
    Graph() = default;
    /// Graph on vertices 1..n without edges.
    explicit Graph(Vertex n);

    void add_vertex(Vertex v);
    void add_edge(Vertex u, Vertex v);
    void remove_vertex(Vertex v);
    void remove_edge(Vertex u, Vertex v);

    bool has_vertex(Vertex v) const { return adj_.contains(v); }
    bool has_edge(Vertex u, Vertex v) const;

    std::span<const Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    std::size_t num_vertices() const { return adj_.size(); }
    std::size_t num_edges() const { return edge_count_; }
    bool empty() const { return adj_.empty(); }

    VertexSet vertices() const;
    std::vector<Edge> edges() const;
    /// Largest vertex id, or 0 for the empty graph.
    Vertex max_vertex() const { return adj_.empty() ? 0 : adj_.rbegin()->first; }

    /// Copy with the given vertices (and incident edges) removed. Ids not in the
    /// graph are ignored.
    Graph without(std::span<const Vertex> removed) const;
    /// Induced subgraph on the given vertices.
    Graph induced(std::span<const Vertex> kept) const;

    /// True iff adjacency is symmetric, loop-free, sorted and duplicate-free.
    bool check_invariants() const;

    auto begin() const { return adj_.begin(); }
    auto end() const { return adj_.end(); }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::map<Vertex, std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

/// Sorted-set helpers over VertexSet.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool contains(const VertexSet& s, Vertex v);

}  // namespace bfvd
