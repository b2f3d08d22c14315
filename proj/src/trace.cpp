#include "bfvd/trace.hpp"

#include <algorithm>

namespace bfvd {

std::string to_string(Rule rule) {
    switch (rule) {
        case Rule::biclique_membership: return "biclique-membership";
        case Rule::raise_weight: return "raise-weight";
        case Rule::heavy_vertex: return "heavy-vertex";
        case Rule::saturated_isolated: return "saturated-isolated";
        case Rule::pendant_absorb: return "pendant-absorb";
        case Rule::pendant_take: return "pendant-take";
        case Rule::path_replace: return "path-replace";
        case Rule::weight_shift: return "weight-shift";
        case Rule::weight_expand: return "weight-expand";
        case Rule::leaf_delete: return "leaf-delete";
        case Rule::middle_of_five: return "middle-of-five";
    }
    return "unknown";
}

std::size_t ReductionTrace::count(Rule rule) const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [rule](const TraceEntry& e) { return e.rule == rule; }));
}

void apply_entry(WbddInstance& inst, const TraceEntry& e) {
    for (const auto& [u, v] : e.removed_edges) inst.g.remove_edge(u, v);
    for (Vertex v : e.removed_vertices) {
        inst.g.remove_vertex(v);
        inst.w.erase(v);
    }
    for (const auto& [v, weight] : e.added_vertices) {
        inst.g.add_vertex(v);
        inst.w[v] = weight;
    }
    for (const auto& [u, v] : e.added_edges) inst.g.add_edge(u, v);
    for (const auto& [v, delta] : e.weight_deltas) inst.w[v] += delta;
    inst.k += e.k_delta;
    inst.r += e.r_delta;
}

WbddInstance replay(WbddInstance inst, const ReductionTrace& trace) {
    for (const auto& e : trace.entries) apply_entry(inst, e);
    return inst;
}

Graph replay(Graph g, const ReductionTrace& trace) {
    WbddInstance inst{std::move(g), {}, 0, 0};
    for (Vertex v : inst.g.vertices()) inst.w[v] = 0;
    return replay(std::move(inst), trace).g;
}

}  // namespace bfvd
