#include "bfvd/generators.hpp"

#include <algorithm>
#include <set>

#include "bfvd/errors.hpp"

namespace bfvd {

Graph random_graph(int n, double p, Rng& rng) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng.chance(p)) g.add_edge(u, v);
    return g;
}

Graph tree_plus_edges(int n, int extra, Rng& rng) {
    if (n < 1) throw ContractError("tree_plus_edges: n must be positive");
    long long room = static_cast<long long>(n) * (n - 1) / 2 - (n - 1);
    if (extra < 0 || extra > room) throw ContractError("tree_plus_edges: too many extra edges");
    Graph g(n);
    for (int v = 2; v <= n; ++v) g.add_edge(v, static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v - 1)) + 1));
    for (int added = 0; added < extra;) {
        auto u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)) + 1);
        auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)) + 1);
        if (u == v || g.has_edge(u, v)) continue;
        g.add_edge(u, v);
        ++added;
    }
    return g;
}

Graph random_degenerate(int n, int d, Rng& rng) {
    if (n < 0 || d < 0) throw ContractError("random_degenerate: negative parameter");
    Graph g(n);
    for (int v = 2; v <= n; ++v) {
        int want = std::min(d, v - 1);
        std::set<Vertex> picked;
        while (static_cast<int>(picked.size()) < want)
            picked.insert(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v - 1)) + 1));
        for (Vertex u : picked) g.add_edge(u, v);
    }
    return g;
}

Graph forest_plus_hubs(int n, int f, double p, Rng& rng) {
    if (f < 0 || f > n) throw ContractError("forest_plus_hubs: need 0 <= f <= n");
    Graph g = n - f > 0 ? tree_plus_edges(n - f, 0, rng) : Graph(0);
    for (int h = n - f + 1; h <= n; ++h) {
        g.add_vertex(h);
        for (int u = 1; u < h; ++u)
            if (rng.chance(p)) g.add_edge(u, h);
    }
    return g;
}

namespace {

// Adjacency over n <= 8 vertices as a bitmask of pairs (u, v), u < v.
using Code = std::uint32_t;

int pair_bit(int u, int v, int n) {
    if (u > v) std::swap(u, v);
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

struct Canonizer {
    int n;
    std::vector<std::uint8_t> adj;  // adj[u] bitmask
    std::vector<int> order;         // vertices sorted by degree
    std::vector<int> cls;           // degree class of each position
    std::vector<int> perm;          // position -> vertex
    std::vector<bool> used;
    Code best = ~Code{0};

    void run() {
        perm.assign(static_cast<std::size_t>(n), -1);
        used.assign(static_cast<std::size_t>(n), false);
        place(0);
    }

    void place(int pos) {
        if (pos == n) {
            Code c = 0;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])] >> perm[static_cast<std::size_t>(b)] & 1)
                        c |= Code{1} << pair_bit(a, b, n);
            best = std::min(best, c);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)] || degree(v) != cls[static_cast<std::size_t>(pos)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            perm[static_cast<std::size_t>(pos)] = v;
            place(pos + 1);
            used[static_cast<std::size_t>(v)] = false;
        }
    }

    int degree(int v) const { return __builtin_popcount(adj[static_cast<std::size_t>(v)]); }
};

Code canonical(const std::vector<std::uint8_t>& adj, int n) {
    Canonizer c{n, adj, {}, {}, {}, {}};
    for (int v = 0; v < n; ++v) c.cls.push_back(c.degree(v));
    std::sort(c.cls.begin(), c.cls.end());
    c.run();
    return c.best;
}

std::vector<std::uint8_t> decode(Code c, int n) {
    std::vector<std::uint8_t> adj(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (c >> pair_bit(a, b, n) & 1) {
                adj[static_cast<std::size_t>(a)] |= static_cast<std::uint8_t>(1u << b);
                adj[static_cast<std::size_t>(b)] |= static_cast<std::uint8_t>(1u << a);
            }
    return adj;
}

}  // namespace

std::vector<Graph> nonisomorphic_graphs(int n) {
    if (n < 0 || n > 8) throw ContractError("nonisomorphic_graphs: supports 0 <= n <= 8");
    std::set<Code> level{0};
    for (int m = 1; m <= n; ++m) {
        std::set<Code> next;
        for (Code c : level) {
            auto adj = decode(c, m - 1);
            adj.push_back(0);
            for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
                auto ext = adj;
                for (int u = 0; u < m - 1; ++u)
                    if (mask >> u & 1) {
                        ext[static_cast<std::size_t>(u)] |= static_cast<std::uint8_t>(1u << (m - 1));
                        ext[static_cast<std::size_t>(m - 1)] |= static_cast<std::uint8_t>(1u << u);
                    }
                next.insert(canonical(ext, m));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (Code c : level) {
        Graph g(n);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (c >> pair_bit(a, b, n) & 1) g.add_edge(a + 1, b + 1);
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace bfvd
