#include <algorithm>
#include <set>

#include "bfvd/combinatorics.hpp"
#include "bfvd/solvers.hpp"
#include "bfvd/structure.hpp"

namespace bfvd {

namespace {

VertexSet forest_vertices(const Graph& g, const VertexSet& d_rest) {
    VertexSet out;
    for (Vertex v : g.vertices())
        if (!contains(d_rest, v)) out.push_back(v);
    return out;
}

// R: forest vertices whose closed forest-neighborhood holds >= 3 side vertices.
VertexSet heavy_forest_vertices(const Graph& g, const VertexSet& forest, const VertexSet& side_union) {
    VertexSet r;
    for (Vertex v : forest) {
        int hits = contains(side_union, v) ? 1 : 0;
        for (Vertex u : g.neighbors(v))
            if (contains(forest, u) && contains(side_union, u)) ++hits;
        if (hits >= 3) r.push_back(v);
    }
    return r;
}

VertexSet pick(const VertexSet& from, const std::vector<std::size_t>& idx) {
    VertexSet out;
    for (auto q : idx) out.push_back(from[q]);
    return out;
}

}  // namespace

Verdict solve_fvn(const BfvdInstance& inst, const VertexSet& d_set, const Deadline& deadline, const FvnProbe* probe) {
    if (inst.i < 2) throw UnsupportedParameter("feedback-vertex solver needs i >= 2; use the degeneracy solver");
    for (Vertex v : d_set)
        if (!inst.g.has_vertex(v)) throw ContractError("feedback vertex set names a vertex not in the graph");
    if (!is_feedback_vertex_set(inst.g, d_set)) throw ContractError("supplied set is not a feedback vertex set");

    Verdict out;
    out.strategy = "fvn";
    if (inst.k < 0) return out;

    // A forest has no K_{2,2}, so deleting the whole FVS always works.
    if (inst.k >= static_cast<int>(d_set.size())) {
        out.yes = true;
        out.witness = d_set;
        verify_verdict(inst, out);
        return out;
    }
    // Small j: two forest vertices can share up to |D| + 1 neighbors, so the
    // structure below does not hold; fall back to plain branching.
    if (inst.j <= static_cast<int>(d_set.size()) + 1) {
        Verdict v = solve_branching(inst, deadline);
        v.strategy = "fvn";
        return v;
    }

    const int i = inst.i, j = inst.j;
    auto notify_sides = [&](const Graph& g, const VertexSet& forest, const SmallerSideCollection& coll) {
        if (probe && probe->on_sides) probe->on_sides(g, forest, coll);
    };
    auto reject = [&](FvnRejection::Reason why, const Graph& g, const VertexSet& forest, const VertexSet& r,
                      int budget) {
        if (probe && probe->on_reject) probe->on_reject(FvnRejection{why, g, forest, r, budget, i, j});
    };

    bool found = for_each_subset_upto(d_set.size(), static_cast<std::size_t>(inst.k), [&](const auto& dpick) {
        ++out.stats.nodes;
        deadline.check();
        const VertexSet d_del = pick(d_set, dpick);
        const VertexSet d_rest = set_difference(d_set, d_del);
        const int k1 = inst.k - static_cast<int>(d_del.size());

        auto [g1, t1] = reduce_biclique_membership(inst.g.without(d_del), i, j);
        out.stats.rule_applications += t1.size();
        const VertexSet forest1 = forest_vertices(g1, d_rest);
        auto coll1 = enumerate_smaller_sides(g1, i, j);
        notify_sides(g1, forest1, coll1);
        const VertexSet r = heavy_forest_vertices(g1, forest1, coll1.side_union());
        if (static_cast<int>(r.size()) > 3 * k1) {
            reject(FvnRejection::Reason::many_r, g1, forest1, r, k1);
            return false;
        }

        return for_each_subset_upto(r.size(), static_cast<std::size_t>(k1), [&](const auto& rpick) {
            ++out.stats.nodes;
            deadline.check();
            const VertexSet r_del = pick(r, rpick);
            const int k2 = k1 - static_cast<int>(r_del.size());
            auto [g2, t2] = reduce_biclique_membership(g1.without(r_del), i, j);
            out.stats.rule_applications += t2.size();
            const VertexSet forest2 = forest_vertices(g2, d_rest);
            auto coll2 = enumerate_smaller_sides(g2, i, j);
            notify_sides(g2, forest2, coll2);
            const VertexSet cover = coll2.side_union();
            int forest_sides = 0;
            for (Vertex v : cover)
                if (contains(forest2, v)) ++forest_sides;
            if (forest_sides > 2 * k2) {
                reject(FvnRejection::Reason::many_forest_sides, g2, forest2, set_difference(r, r_del), k2);
                return false;
            }
            Verdict inner = solve_vc(BfvdInstance{g2, i, j, k2}, cover, deadline);
            out.stats.nodes += inner.stats.nodes;
            if (!inner.yes) return false;
            out.witness = set_union(set_union(d_del, r_del), inner.witness);
            return true;
        });
    });
    out.yes = found;
    verify_verdict(inst, out);
    return out;
}

}  // namespace bfvd
