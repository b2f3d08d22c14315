#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "bfvd/biclique.hpp"
#include "bfvd/errors.hpp"
#include "bfvd/instance.hpp"

namespace bfvd {

struct SolveStats {
    std::uint64_t nodes = 0;
    std::uint64_t rule_applications = 0;
};

struct Verdict {
    bool yes = false;
    VertexSet witness;  // present iff yes; |witness| <= k and G - witness is K_{i,j}-free
    SolveStats stats;
    std::string strategy;
};

/// Throws IntegrityError unless a yes-verdict carries a verified witness.
void verify_verdict(const BfvdInstance& inst, const Verdict& v);

// ---- brute force ---------------------------------------------------------

struct OracleOptions {
    int max_vertices = 16;
    bool allow_large = false;
};

/// All vertex subsets of size <= k, by size then lexicographically; the first
/// feasible one is returned, so the witness is a minimum solution.
Verdict solve_oracle(const BfvdInstance& inst, OracleOptions opts = {}, const Deadline& deadline = {});

/// Brute force for (weighted) bounded-degree deletion. Same enumeration order.
Verdict solve_wbdd_oracle(const WbddInstance& inst, OracleOptions opts = {});
Verdict solve_bdd_oracle(const BddInstance& inst, OracleOptions opts = {});

// ---- parameterized solvers ----------------------------------------------

/// Guesses the part of the solution inside `cover` and, outside the cover,
/// a multiset of neighborhood classes (twins share a class). Representatives
/// are the lowest ids of each class.
Verdict solve_vc(const BfvdInstance& inst, const VertexSet& cover, const Deadline& deadline = {});

/// Depth-k search tree branching on the vertices of a biclique.
Verdict solve_branching(const BfvdInstance& inst, const Deadline& deadline = {});

struct BranchingSet {
    int threshold = 0;  // (4d + 2) k
    VertexSet x;        // union of a greedy prefix of the smaller sides
    VertexSet u;        // vertices with >= |X| / k neighbors in X
    VertexSet w;        // X ∪ U; meets every solution
};

/// Requires k >= 1 and ss(G) > (4d + 2) k.
BranchingSet find_branching_set(const BfvdInstance& inst, int d);

Verdict solve_degenerate(const BfvdInstance& inst, const Deadline& deadline = {});

/// A guess pruned by one of the two counting arguments of the feedback-vertex
/// solver. Exposed so tests can confirm no solution was lost.
struct FvnRejection {
    enum class Reason { many_r, many_forest_sides };
    Reason reason{};
    Graph graph;        // graph at the moment of rejection
    VertexSet forest;   // V(F) in that graph
    VertexSet r_set;    // R (empty set for many_r is still the full R)
    int budget = 0;     // residual k
    int i = 0, j = 0;
};

struct FvnProbe {
    std::function<void(const FvnRejection&)> on_reject;
    /// Called after each reduction with the current graph, V(F) and sides.
    std::function<void(const Graph&, const VertexSet&, const SmallerSideCollection&)> on_sides;
};

/// Requires i >= 2 and a feedback vertex set `d_set` of the graph.
Verdict solve_fvn(const BfvdInstance& inst, const VertexSet& d_set, const Deadline& deadline = {},
                  const FvnProbe* probe = nullptr);

// ---- front door ------------------------------------------------------------

enum class Strategy { automatic, oracle, vc, branch, degen, fvn };

std::optional<Strategy> parse_strategy(std::string_view name);
std::string to_string(Strategy s);

struct SolveOptions {
    Strategy strategy = Strategy::automatic;
    std::optional<VertexSet> fvs;  // externally supplied feedback vertex set
    int oracle_threshold = 14;     // automatic: oracle when |V| <= this
    int fvs_cap = 12;              // automatic: fvn when a minimum FVS of size <= cap exists
    bool allow_large_oracle = false;
    Deadline deadline;
};

Verdict solve(const BfvdInstance& inst, const SolveOptions& opts = {});

}  // namespace bfvd
