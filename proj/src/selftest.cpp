#include "bfvd/selftest.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "bfvd/bfvd_kernel.hpp"
#include "bfvd/biclique.hpp"
#include "bfvd/generators.hpp"
#include "bfvd/reductions.hpp"
#include "bfvd/solvers.hpp"
#include "bfvd/structure.hpp"
#include "bfvd/wbdd_kernel.hpp"

namespace bfvd {

namespace {

struct Suite {
    const char* name;
    // Returns an empty string when the case holds, else a description.
    std::function<std::string(Rng&)> check;
};

BfvdInstance random_bfvd(Rng& rng, int max_n, int max_j) {
    int n = rng.between(0, max_n);
    int j = rng.between(1, max_j);
    int i = rng.between(1, j);
    return {random_graph(n, 0.2 + 0.1 * rng.between(0, 5), rng), i, j, rng.between(0, 3)};
}

std::string describe(const BfvdInstance& inst) {
    return "n=" + std::to_string(inst.g.num_vertices()) + " m=" + std::to_string(inst.g.num_edges()) +
           " i=" + std::to_string(inst.i) + " j=" + std::to_string(inst.j) + " k=" + std::to_string(inst.k);
}

std::string round_trip(Rng& rng) {
    BfvdInstance a = random_bfvd(rng, 12, 4);
    std::string text = write_instance(a);
    if (write_instance(std::get<BfvdInstance>(parse_instance(text))) != text) return "bfvd text changed";
    WbddInstance w = to_wbdd(BddInstance{a.g, 3, a.k});
    for (Vertex v : w.g.vertices()) w.w[v] = rng.between(0, 3);
    text = write_instance(w);
    if (write_instance(std::get<WbddInstance>(parse_instance(text))) != text) return "wbdd text changed";
    return {};
}

std::string solvers(Rng& rng) {
    BfvdInstance inst = random_bfvd(rng, 9, 3);
    bool expect = solve_oracle(inst).yes;
    auto check = [&](const char* name, const Verdict& v) -> std::string {
        verify_verdict(inst, v);
        return v.yes == expect ? "" : std::string(name) + " disagrees on " + describe(inst);
    };
    std::string bad;
    for (Strategy s : {Strategy::vc, Strategy::branch, Strategy::degen}) {
        bad = check(to_string(s).c_str(), solve(inst, {.strategy = s}));
        if (!bad.empty()) return bad;
    }
    if (inst.i >= 2) return check("fvn", solve_fvn(inst, minimum_fvs(inst.g).fvs));
    return {};
}

std::string sides_cover(Rng& rng) {
    BfvdInstance inst = random_bfvd(rng, 14, 4);
    auto [g, trace] = reduce_biclique_membership(inst.g, inst.i, inst.j);
    auto ref = enumerate_smaller_sides(g, inst.i, inst.j);
    if (!is_vertex_cover(g, ref.side_union())) return "side union misses an edge on " + describe(inst);
    if (enumerate_smaller_sides(g, inst.i, inst.j, SideBackend::maximal_bicliques).sides != ref.sides)
        return "enumeration backends differ on " + describe(inst);
    if (replay(inst.g, trace) != g) return "membership trace does not replay";
    return {};
}

std::string bdd_kernel(Rng& rng) {
    BddInstance inst{tree_plus_edges(rng.between(1, 11), 0, rng), rng.between(0, 4), rng.between(0, 3)};
    for (int extra = rng.between(0, 3); extra > 0; --extra) {
        auto u = static_cast<Vertex>(rng.between(1, static_cast<int>(inst.g.num_vertices())));
        auto v = static_cast<Vertex>(rng.between(1, static_cast<int>(inst.g.num_vertices())));
        if (u != v && !inst.g.has_edge(u, v)) inst.g.add_edge(u, v);
    }
    BddKernel ker = kernelize_bdd(inst.g, inst.r, inst.k);
    bool expect = solve_bdd_oracle(inst).yes;
    bool got = ker.decided == Decision::open ? solve_bdd_oracle(ker.instance, {.allow_large = true}).yes
                                             : ker.decided == Decision::yes;
    if (got != expect) return "bdd kernel changed the answer";
    WbddInstance replayed = replay(to_wbdd(inst), ker.trace);
    if (replayed.g != ker.instance.g || replayed.k != ker.instance.k) return "bdd kernel trace does not replay";
    return {};
}

std::string bfvd_kernel(Rng& rng) {
    int n = rng.between(1, 12);
    int extra = std::min(rng.between(0, 3), (n - 1) * (n - 2) / 2);
    BfvdInstance inst{tree_plus_edges(n, extra, rng), rng.between(2, 3), 0, rng.between(0, 3)};
    inst.j = rng.between(inst.i, 4);
    auto [ker, trace] = kernelize_bfvd(inst);
    if (solve_oracle(ker).yes != solve_oracle(inst).yes) return "bfvd kernel changed the answer on " + describe(inst);
    if (replay(inst.g, trace) != ker.g) return "bfvd kernel trace does not replay";
    return {};
}

std::string gadget(Rng& rng) {
    int i = rng.between(2, 3);
    int n = rng.between(i + 1, 5);
    BddInstance bdd{random_graph(n, 0.5, rng), rng.between(0, 2), rng.between(0, 3)};
    BfvdInstance g = hardness_gadget(bdd, i);
    if (solve_bdd_oracle(bdd).yes != solve_oracle(g, {.allow_large = true}).yes) return "gadget answer differs";
    return {};
}

std::string path_dp(Rng& rng) {
    int r = rng.between(2, 4);
    WeightedPath p;
    int len = rng.between(1, 10);
    for (int a = 0; a < len; ++a) p.weights.push_back(rng.between(std::max(0, r - 2), r));
    int best = kInfinity;
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
        bool ok = true;
        for (int a = 0; a < len && ok; ++a) {
            if (mask >> a & 1) continue;
            int deg = (a > 0 && !(mask >> (a - 1) & 1)) + (a + 1 < len && !(mask >> (a + 1) & 1));
            ok = deg <= r - p.weights[static_cast<std::size_t>(a)];
        }
        if (ok) best = std::min(best, __builtin_popcount(mask));
    }
    return opt_path(p, r) == best ? "" : "path optimum differs from brute force";
}

}  // namespace

int run_selftest(std::ostream& out, std::uint64_t seed, int rounds) {
    const Suite suites[] = {
        {"format-round-trip", round_trip}, {"solver-agreement", solvers}, {"smaller-sides", sides_cover},
        {"bdd-kernel", bdd_kernel},        {"bfvd-kernel", bfvd_kernel}, {"hardness-gadget", gadget},
        {"path-optimum", path_dp},
    };
    int failures = 0;
    for (const auto& suite : suites) {
        Rng rng(seed);
        int bad = 0;
        std::string first;
        for (int round = 0; round < rounds; ++round) {
            std::string msg;
            try {
                msg = suite.check(rng);
            } catch (const std::exception& e) {
                msg = std::string("exception: ") + e.what();
            }
            if (!msg.empty() && bad++ == 0) first = msg;
        }
        failures += bad;
        out << "selftest " << suite.name << ": " << (bad ? "FAIL" : "ok") << " (" << rounds << " cases";
        if (bad) out << ", " << bad << " violations, first: " << first;
        out << ")\n";
    }
    return failures;
}

}  // namespace bfvd
