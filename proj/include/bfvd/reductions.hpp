#pragma once

#include "bfvd/instance.hpp"

namespace bfvd {

/// Bounded-degree deletion with degree bound r is biclique-free deletion with
/// i = 1, j = r + 1.
BfvdInstance bdd_as_bfvd(const BddInstance& inst);

struct GadgetLayout {
    int n = 0;  // |V(G)|
    int i = 0;
    int j = 0;  // n + r + 1
    /// Per original vertex (ascending): its i - 1 side partners and n private
    /// neighbors, allocated in one consecutive id block after max id of G.
    std::vector<std::pair<Vertex, std::pair<VertexSet, VertexSet>>> blocks;
};

/// Builds (G', i, j = n + r + 1, k) from a bounded-degree instance (G, r, k):
/// every v is joined with i - 1 new partners S_v to n new vertices T_v, and
/// each edge uv of G adds u-S_v and v-S_u. Requires i >= 2 and n > i.
BfvdInstance hardness_gadget(const BddInstance& inst, int i, GadgetLayout* layout = nullptr);

}  // namespace bfvd
