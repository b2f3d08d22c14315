#include <algorithm>

#include "bfvd/bitgraph.hpp"
#include "bfvd/combinatorics.hpp"
#include "bfvd/solvers.hpp"

namespace bfvd {

void verify_verdict(const BfvdInstance& inst, const Verdict& v) {
    if (!v.yes) {
        if (!v.witness.empty()) throw IntegrityError("no-verdict carries a witness");
        return;
    }
    if (!std::is_sorted(v.witness.begin(), v.witness.end()) ||
        std::adjacent_find(v.witness.begin(), v.witness.end()) != v.witness.end())
        throw IntegrityError("witness is not a sorted set");
    if (static_cast<int>(v.witness.size()) > inst.k) throw IntegrityError("witness exceeds budget k");
    for (Vertex x : v.witness)
        if (!inst.g.has_vertex(x)) throw IntegrityError("witness names a vertex not in the graph");
    if (contains_biclique(inst.g.without(v.witness), inst.i, inst.j))
        throw IntegrityError("graph minus witness still contains a biclique");
}

namespace {

void guard(std::size_t n, const OracleOptions& opts) {
    if (!opts.allow_large && n > static_cast<std::size_t>(opts.max_vertices))
        throw SizeGuardError("oracle refuses " + std::to_string(n) + " vertices (limit " +
                             std::to_string(opts.max_vertices) + ")");
}

template <typename Feasible>
Verdict subset_search(const BitGraph& bg, int k, Feasible&& feasible, const Deadline& deadline) {
    Verdict out;
    out.strategy = "oracle";
    if (k < 0) return out;
    Bits alive = bg.all();
    for_each_subset_upto(bg.size(), static_cast<std::size_t>(k), [&](const std::vector<std::size_t>& pick) {
        if ((++out.stats.nodes & 0xFFF) == 0) deadline.check();
        for (auto idx : pick) alive.reset(idx);
        bool ok = feasible(alive);
        for (auto idx : pick) alive.set(idx);
        if (ok) {
            out.yes = true;
            for (auto idx : pick) out.witness.push_back(bg.id(idx));
        }
        return ok;
    });
    return out;
}

}  // namespace

Verdict solve_oracle(const BfvdInstance& inst, OracleOptions opts, const Deadline& deadline) {
    guard(inst.g.num_vertices(), opts);
    BitGraph bg(inst.g);
    Verdict out = subset_search(
        bg, inst.k, [&](const Bits& alive) { return !bg.has_biclique(alive, inst.i, inst.j); }, deadline);
    verify_verdict(inst, out);
    return out;
}

Verdict solve_wbdd_oracle(const WbddInstance& inst, OracleOptions opts) {
    guard(inst.g.num_vertices(), opts);
    BitGraph bg(inst.g);
    std::vector<int> cap(bg.size());
    for (std::size_t idx = 0; idx < bg.size(); ++idx) cap[idx] = inst.r - inst.weight(bg.id(idx));
    return subset_search(
        bg, inst.k,
        [&](const Bits& alive) {
            bool ok = true;
            alive.for_each([&](std::size_t v) {
                if (ok && static_cast<int>(bg.row(v).count_and(alive)) > cap[v]) ok = false;
            });
            return ok;
        },
        Deadline{});
}

Verdict solve_bdd_oracle(const BddInstance& inst, OracleOptions opts) {
    return solve_wbdd_oracle(to_wbdd(inst), opts);
}

}  // namespace bfvd
