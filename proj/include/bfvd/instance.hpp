#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "bfvd/graph.hpp"

namespace bfvd {

/// Delete at most k vertices so that no K_{i,j} remains.
struct BfvdInstance {
    Graph g;
    int i = 1;
    int j = 1;
    int k = 0;
};

/// Delete at most k vertices so that every kept vertex v has degree <= r - w[v].
/// k may drop below zero during kernelization, which marks a decided no.
struct WbddInstance {
    Graph g;
    std::map<Vertex, int> w;
    int r = 0;
    int k = 0;

    int weight(Vertex v) const {
        auto it = w.find(v);
        return it == w.end() ? 0 : it->second;
    }
};

/// Delete at most k vertices so that every kept vertex has degree <= r.
struct BddInstance {
    Graph g;
    int r = 0;
    int k = 0;
};

using Instance = std::variant<BfvdInstance, WbddInstance>;

/// Reads the line-oriented instance format:
///   p bfvd <n> <m>            | p wbdd <n> <m> <r> <k>
///   e <u> <v>                 (1 <= u, v <= n, u != v)
///   param <i> <j> <k>         (bfvd only, exactly once)
///   w <v> <weight>            (wbdd only, optional, default 0)
/// '#' starts a comment. Throws ParseError naming the offending line.
Instance parse_instance(std::string_view text);
Instance read_instance_file(const std::string& path);

/// Writers relabel vertices to 1..n in ascending id order and emit edges and
/// weights in ascending order, so parse/write is a bit-exact round trip.
std::string write_instance(const BfvdInstance& inst);
std::string write_instance(const WbddInstance& inst);
std::string write_instance(const BddInstance& inst);

/// Whitespace-separated vertex ids with '#' comments (used for --fvs-file).
VertexSet parse_vertex_list(std::string_view text);

WbddInstance to_wbdd(const BddInstance& inst);
/// Requires all weights zero.
BddInstance to_bdd(const WbddInstance& inst);

}  // namespace bfvd
