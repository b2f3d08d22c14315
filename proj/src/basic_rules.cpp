#include <algorithm>
#include <set>

#include "bfvd/wbdd_kernel.hpp"

namespace bfvd {

std::pair<WbddInstance, ReductionTrace> apply_basic_rules(WbddInstance inst) {
    ReductionTrace trace;
    for (Vertex v : inst.g.vertices()) inst.w.try_emplace(v, 0);

    std::set<Vertex> work;
    for (const auto& [v, _] : inst.g) work.insert(v);

    auto push_neighbors = [&](Vertex v) {
        for (Vertex u : inst.g.neighbors(v)) work.insert(u);
    };
    auto record = [&](TraceEntry e) {
        apply_entry(inst, e);
        trace.append(std::move(e));
    };

    while (!work.empty()) {
        Vertex v = *work.begin();
        work.erase(work.begin());
        if (!inst.g.has_vertex(v)) continue;
        const int r = inst.r;
        const int deg = static_cast<int>(inst.g.degree(v));
        const int wv = inst.w.at(v);

        if (wv > r) {
            push_neighbors(v);
            record({.rule = Rule::heavy_vertex, .removed_vertices = {v}, .k_delta = -1});
            continue;
        }
        if (deg + wv < r) {
            record({.rule = Rule::raise_weight, .weight_deltas = {{v, r - deg - wv}}});
            work.insert(v);
            continue;
        }
        if (deg == 0 && wv == r) {
            record({.rule = Rule::saturated_isolated, .removed_vertices = {v}});
            continue;
        }
        if (deg == 1) {
            Vertex u = inst.g.neighbors(v)[0];
            if (wv == r - 1) {
                record({.rule = Rule::pendant_absorb, .removed_vertices = {v}, .weight_deltas = {{u, 1}}});
                work.insert(u);
            } else if (wv == r) {
                push_neighbors(u);
                work.erase(v);
                work.erase(u);
                std::vector<Vertex> both{std::min(u, v), std::max(u, v)};
                record({.rule = Rule::pendant_take, .removed_vertices = both, .k_delta = -1});
            }
        }
    }
    return {std::move(inst), std::move(trace)};
}

}  // namespace bfvd
