#include <algorithm>

#include "bfvd/solvers.hpp"

namespace bfvd {

namespace {

bool branch(const Graph& g, int i, int j, int k, VertexSet& chosen, SolveStats& stats, const Deadline& deadline) {
    ++stats.nodes;
    deadline.check();
    auto bc = find_biclique(g, i, j);
    if (!bc) return true;
    if (k == 0) return false;
    VertexSet hit = set_union(bc->smaller, bc->larger);
    for (Vertex v : hit) {
        chosen.push_back(v);
        if (branch(g.without(std::span<const Vertex>(&v, 1)), i, j, k - 1, chosen, stats, deadline)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

Verdict solve_branching(const BfvdInstance& inst, const Deadline& deadline) {
    Verdict out;
    out.strategy = "branch";
    if (inst.k >= 0) {
        VertexSet chosen;
        out.yes = branch(inst.g, inst.i, inst.j, inst.k, chosen, out.stats, deadline);
        if (out.yes) {
            std::sort(chosen.begin(), chosen.end());
            out.witness = std::move(chosen);
        }
    }
    verify_verdict(inst, out);
    return out;
}

}  // namespace bfvd
