#include <algorithm>
#include <set>

#include "bfvd/solvers.hpp"
#include "bfvd/structure.hpp"

namespace bfvd {

BranchingSet find_branching_set(const BfvdInstance& inst, int d) {
    if (inst.k < 1) throw ContractError("branching set needs k >= 1");
    auto coll = enumerate_smaller_sides(inst.g, inst.i, inst.j);
    BranchingSet out;
    out.threshold = (4 * d + 2) * inst.k;
    if (static_cast<int>(coll.side_union().size()) <= out.threshold)
        throw ContractError("branching set needs ss(G) > (4d + 2) k");

    // Greedy prefix in canonical side order: stop as soon as the union reaches
    // the threshold, so it overshoots by fewer than i vertices.
    std::set<Vertex> x;
    for (const auto& [side, _] : coll.sides) {
        x.insert(side.begin(), side.end());
        if (static_cast<int>(x.size()) >= out.threshold) break;
    }
    out.x.assign(x.begin(), x.end());

    const auto xs = static_cast<long long>(out.x.size());
    for (Vertex v : inst.g.vertices()) {
        long long hits = 0;
        for (Vertex u : inst.g.neighbors(v))
            if (x.contains(u)) ++hits;
        if (hits * inst.k >= xs) out.u.push_back(v);
    }
    out.w = set_union(out.x, out.u);
    return out;
}

namespace {

bool degenerate(const Graph& input, int i, int j, int k, VertexSet& chosen, SolveStats& stats,
                const Deadline& deadline) {
    ++stats.nodes;
    deadline.check();
    auto [g, trace] = reduce_biclique_membership(input, i, j);
    stats.rule_applications += trace.size();
    if (g.empty()) return true;
    const int d = degeneracy(g).d;
    if (i > d) return true;
    if (k == 0) return !contains_biclique(g, i, j);

    auto coll = enumerate_smaller_sides(g, i, j);
    VertexSet cover = coll.side_union();
    if (static_cast<int>(cover.size()) <= (4 * d + 2) * k) {
        Verdict v = solve_vc(BfvdInstance{g, i, j, k}, cover, deadline);
        stats.nodes += v.stats.nodes;
        if (v.yes) chosen.insert(chosen.end(), v.witness.begin(), v.witness.end());
        return v.yes;
    }
    BranchingSet ws = find_branching_set(BfvdInstance{g, i, j, k}, d);
    for (Vertex w : ws.w) {
        chosen.push_back(w);
        if (degenerate(g.without(std::span<const Vertex>(&w, 1)), i, j, k - 1, chosen, stats, deadline))
            return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

Verdict solve_degenerate(const BfvdInstance& inst, const Deadline& deadline) {
    Verdict out;
    out.strategy = "degen";
    if (inst.k >= 0) {
        VertexSet chosen;
        out.yes = degenerate(inst.g, inst.i, inst.j, inst.k, chosen, out.stats, deadline);
        if (out.yes) {
            std::sort(chosen.begin(), chosen.end());
            out.witness = std::move(chosen);
        }
    }
    verify_verdict(inst, out);
    return out;
}

}  // namespace bfvd
