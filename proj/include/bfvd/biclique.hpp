#pragma once

#include <map>
#include <optional>

#include "bfvd/graph.hpp"
#include "bfvd/trace.hpp"

namespace bfvd {

/// The family of smaller sides of all K_{i,j} in a graph: every i-set whose
/// common neighborhood has at least j vertices, with that neighborhood cached.
struct SmallerSideCollection {
    int i = 1;
    int j = 1;
    std::map<VertexSet, VertexSet> sides;  // canonical side -> common neighborhood

    bool empty() const { return sides.empty(); }
    std::size_t size() const { return sides.size(); }
    /// Union of all sides (its size is ss(G)).
    VertexSet side_union() const;
};

enum class SideBackend {
    reference,         // i-subsets of every neighborhood
    maximal_bicliques  // i-subsets of both sides of every maximal biclique
};

SmallerSideCollection enumerate_smaller_sides(const Graph& g, int i, int j,
                                              SideBackend backend = SideBackend::reference);

struct Biclique {
    VertexSet smaller;  // |smaller| = i
    VertexSet larger;   // |larger| = j
};

/// Lexicographically first side, paired with its first j common neighbors.
std::optional<Biclique> find_biclique(const Graph& g, int i, int j);
bool contains_biclique(const Graph& g, int i, int j);

/// Deletes vertices, then edges, that lie in no K_{i,j}, round by round until
/// a round deletes nothing.
std::pair<Graph, ReductionTrace> reduce_biclique_membership(const Graph& g, int i, int j);

int ss_value(const Graph& g, int i, int j);

}  // namespace bfvd
