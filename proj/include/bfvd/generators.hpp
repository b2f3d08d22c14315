#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bfvd/instance.hpp"

namespace bfvd {

/// Seeded draws shared by every generator. The engine is std::mt19937_64
/// seeded with the 64-bit seed; below(n) is engine() % n and chance(p)
/// compares (engine() >> 11) * 2^-53 with p. Keeping the draw recipe this
/// plain lets other implementations regenerate identical instances.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
    bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

private:
    std::mt19937_64 engine_;
};

/// G(n, p) on vertices 1..n; pairs u < v visited in lexicographic order.
Graph random_graph(int n, double p, Rng& rng);

/// Random recursive tree (vertex v >= 2 picks parent below(v - 1) + 1) plus
/// `extra` further edges drawn as uniform pairs, rejecting loops and repeats.
/// The result is connected with feedback edge number exactly `extra`.
Graph tree_plus_edges(int n, int extra, Rng& rng);

/// Vertex v attaches to min(d, v - 1) distinct earlier vertices drawn
/// uniformly (repeats redrawn). Degeneracy is at most d.
Graph random_degenerate(int n, int d, Rng& rng);

/// Random tree on n - f vertices plus f hub vertices n-f+1..n, each adjacent
/// to every other vertex with probability p. The hubs form a feedback vertex set.
Graph forest_plus_hubs(int n, int f, double p, Rng& rng);

/// One representative of every isomorphism class of graphs on vertices
/// 1..n, ordered by canonical code. Practical up to n = 7.
std::vector<Graph> nonisomorphic_graphs(int n);

}  // namespace bfvd
