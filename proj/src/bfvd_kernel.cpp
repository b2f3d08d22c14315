#include "bfvd/bfvd_kernel.hpp"

#include "bfvd/errors.hpp"

namespace bfvd {

std::optional<std::vector<Vertex>> find_middle_of_five(const Graph& g) {
    auto other = [&](Vertex mid, Vertex from) {
        auto nb = g.neighbors(mid);
        return nb[0] == from ? nb[1] : nb[0];
    };
    for (const auto& [v3, nb] : g) {
        if (nb.size() != 2) continue;
        Vertex v2 = nb[0], v4 = nb[1];
        if (g.degree(v2) != 2 || g.degree(v4) != 2) continue;
        Vertex v1 = other(v2, v3), v5 = other(v4, v3);
        // v1 != v3 and v5 != v3 hold by simplicity; v1 == v4 or v1 == v5 means
        // the component is a cycle on three or four vertices.
        if (v1 == v4 || v5 == v2 || v1 == v5) continue;
        return std::vector<Vertex>{v1, v2, v3, v4, v5};
    }
    return std::nullopt;
}

std::pair<BfvdInstance, ReductionTrace> kernelize_bfvd(const BfvdInstance& inst) {
    if (inst.i < 2) throw UnsupportedParameter("this kernel needs i >= 2; use the weighted kernel for i = 1");
    BfvdInstance out = inst;
    ReductionTrace trace;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v : out.g.vertices()) {
            if (!out.g.has_vertex(v) || out.g.degree(v) > 1) continue;
            // A neighbor that drops to degree <= 1 is larger or was already
            // passed; either way the next round or this loop picks it up.
            trace.append({.rule = Rule::leaf_delete, .removed_vertices = {v}});
            out.g.remove_vertex(v);
            changed = true;
        }
        if (changed) continue;
        if (auto path = find_middle_of_five(out.g)) {
            Vertex v3 = (*path)[2];
            trace.append({.rule = Rule::middle_of_five, .removed_vertices = {v3}});
            out.g.remove_vertex(v3);
            changed = true;
        }
    }
    return {std::move(out), std::move(trace)};
}

}  // namespace bfvd
