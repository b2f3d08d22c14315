#include "bfvd/reductions.hpp"

#include "bfvd/errors.hpp"

namespace bfvd {

BfvdInstance bdd_as_bfvd(const BddInstance& inst) {
    return BfvdInstance{inst.g, 1, inst.r + 1, inst.k};
}

BfvdInstance hardness_gadget(const BddInstance& inst, int i, GadgetLayout* layout) {
    const int n = static_cast<int>(inst.g.num_vertices());
    if (i < 2) throw ContractError("hardness_gadget: i must be at least 2");
    if (n <= i) throw ContractError("hardness_gadget: requires |V(G)| > i");

    Graph g = inst.g;
    GadgetLayout lay;
    lay.n = n;
    lay.i = i;
    lay.j = n + inst.r + 1;

    Vertex next = inst.g.max_vertex() + 1;
    std::map<Vertex, VertexSet> partners;
    for (Vertex v : inst.g.vertices()) {
        VertexSet s, t;
        for (int a = 0; a < i - 1; ++a) s.push_back(next++);
        for (int a = 0; a < n; ++a) t.push_back(next++);
        for (Vertex x : s) g.add_vertex(x);
        for (Vertex x : t) g.add_vertex(x);
        for (Vertex y : t) {
            g.add_edge(v, y);
            for (Vertex x : s) g.add_edge(x, y);
        }
        partners[v] = s;
        lay.blocks.push_back({v, {std::move(s), std::move(t)}});
    }
    for (auto [u, v] : inst.g.edges()) {
        for (Vertex s : partners[v]) g.add_edge(u, s);
        for (Vertex s : partners[u]) g.add_edge(v, s);
    }
    if (layout) *layout = std::move(lay);
    return BfvdInstance{std::move(g), i, n + inst.r + 1, inst.k};
}

}  // namespace bfvd
