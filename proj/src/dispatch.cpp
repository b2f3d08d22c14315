#include "bfvd/solvers.hpp"
#include "bfvd/structure.hpp"

namespace bfvd {

std::optional<Strategy> parse_strategy(std::string_view name) {
    if (name == "auto") return Strategy::automatic;
    if (name == "oracle") return Strategy::oracle;
    if (name == "vc") return Strategy::vc;
    if (name == "branch") return Strategy::branch;
    if (name == "degen") return Strategy::degen;
    if (name == "fvn") return Strategy::fvn;
    return std::nullopt;
}

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::automatic: return "auto";
        case Strategy::oracle: return "oracle";
        case Strategy::vc: return "vc";
        case Strategy::branch: return "branch";
        case Strategy::degen: return "degen";
        case Strategy::fvn: return "fvn";
    }
    return "auto";
}

namespace {

VertexSet fvs_for(const BfvdInstance& inst, const SolveOptions& opts) {
    if (opts.fvs) return *opts.fvs;
    return minimum_fvs(inst.g).fvs;
}

}  // namespace

Verdict solve(const BfvdInstance& inst, const SolveOptions& opts) {
    if (inst.i < 1 || inst.i > inst.j) throw ContractError("instance needs 1 <= i <= j");
    switch (opts.strategy) {
        case Strategy::oracle:
            return solve_oracle(inst, {.allow_large = opts.allow_large_oracle}, opts.deadline);
        case Strategy::vc: {
            // After the membership rule the union of smaller sides covers every edge.
            auto [g, trace] = reduce_biclique_membership(inst.g, inst.i, inst.j);
            BfvdInstance reduced{g, inst.i, inst.j, inst.k};
            Verdict v = solve_vc(reduced, enumerate_smaller_sides(g, inst.i, inst.j).side_union(), opts.deadline);
            v.stats.rule_applications += trace.size();
            verify_verdict(inst, v);
            return v;
        }
        case Strategy::branch: return solve_branching(inst, opts.deadline);
        case Strategy::degen: return solve_degenerate(inst, opts.deadline);
        case Strategy::fvn: return solve_fvn(inst, fvs_for(inst, opts), opts.deadline);
        case Strategy::automatic: break;
    }

    if (static_cast<int>(inst.g.num_vertices()) <= opts.oracle_threshold)
        return solve_oracle(inst, {.allow_large = true}, opts.deadline);
    if (inst.i >= 2) {
        if (opts.fvs && static_cast<int>(opts.fvs->size()) <= opts.fvs_cap)
            return solve_fvn(inst, *opts.fvs, opts.deadline);
        if (!opts.fvs) {
            auto res = minimum_fvs(inst.g, opts.fvs_cap);
            if (res.found()) return solve_fvn(inst, res.fvs, opts.deadline);
        }
    }
    return solve_degenerate(inst, opts.deadline);
}

}  // namespace bfvd
