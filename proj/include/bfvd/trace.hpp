#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bfvd/graph.hpp"
#include "bfvd/instance.hpp"

namespace bfvd {

enum class Rule {
    biclique_membership,  // delete a vertex or edge lying in no K_{i,j}
    raise_weight,         // deg(v) + w(v) < r: raise w(v) to r - deg(v)
    heavy_vertex,         // w(v) > r: delete v, k -= 1
    saturated_isolated,   // isolated v with w(v) = r: delete v
    pendant_absorb,       // deg(v) = 1, w(v) = r - 1: delete v, w(u) += 1
    pendant_take,         // deg(v) = 1, w(v) = r: delete v and u, k -= 1
    path_replace,         // swap a degree-2 window for a shorter equivalent one
    weight_shift,         // all weights positive: decrement all weights and r
    weight_expand,        // turn weights into pendant vertices
    leaf_delete,          // i >= 2: delete a vertex of degree <= 1
    middle_of_five,       // i >= 2: delete v3 of a path v1..v5 with deg(v2..v4) = 2
};

std::string to_string(Rule rule);

/// One rule application, recorded with enough detail to replay it
/// mechanically: removals happen first, then additions, then weight, k and r
/// adjustments.
struct TraceEntry {
    Rule rule{};
    std::vector<Vertex> removed_vertices;
    std::vector<Edge> removed_edges;
    std::vector<std::pair<Vertex, int>> added_vertices;  // (id, weight)
    std::vector<Edge> added_edges;
    std::vector<std::pair<Vertex, int>> weight_deltas;
    int k_delta = 0;
    int r_delta = 0;
};

struct ReductionTrace {
    std::vector<TraceEntry> entries;

    void append(TraceEntry e) { entries.push_back(std::move(e)); }
    void extend(const ReductionTrace& other) {
        entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    }
    std::size_t size() const { return entries.size(); }
    std::size_t count(Rule rule) const;
};

void apply_entry(WbddInstance& inst, const TraceEntry& e);
WbddInstance replay(WbddInstance inst, const ReductionTrace& trace);
Graph replay(Graph g, const ReductionTrace& trace);

}  // namespace bfvd
