#include "bfvd/errors.hpp"
#include "bfvd/generators.hpp"
#include "bfvd/solvers.hpp"
#include "bfvd/structure.hpp"
#include "doctest.h"
#include "support/brute.hpp"

using namespace bfvd;

namespace {

Graph stars(int count, int leaves) {
    Graph g;
    for (int s = 0; s < count; ++s) g = brute::disjoint(g, brute::complete_bipartite(1, leaves));
    return g;
}

void check_sound(const BfvdInstance& inst, const Verdict& v) {
    if (!v.yes) return;
    CHECK(static_cast<int>(v.witness.size()) <= inst.k);
    CHECK_FALSE(brute::has_biclique(inst.g.without(v.witness), inst.i, inst.j));
}

BfvdInstance random_instance(Rng& rng, int max_n) {
    BfvdInstance inst{random_graph(rng.between(0, max_n), 0.1 * rng.between(2, 8), rng), 1, 1, rng.between(0, 3)};
    inst.j = rng.between(1, 4);
    inst.i = rng.between(1, inst.j);
    return inst;
}

}  // namespace

TEST_SUITE("solvers") {

TEST_CASE("oracle examples") {
    Graph c4 = brute::cycle(4);
    Verdict v = solve_oracle({c4, 1, 2, 2});
    CHECK(v.yes);
    CHECK(v.witness.size() == 2);
    check_sound({c4, 1, 2, 2}, v);
    CHECK_FALSE(solve_oracle({c4, 1, 2, 1}).yes);
    Verdict k23 = solve_oracle({brute::complete_bipartite(2, 3), 2, 3, 1});
    CHECK(k23.yes);
    CHECK(k23.witness == VertexSet{1});
}

TEST_CASE("oracle witness is minimum and size guard holds") {
    Rng rng(41);
    for (int round = 0; round < 150; ++round) {
        BfvdInstance inst = random_instance(rng, 9);
        Verdict v = solve_oracle(inst);
        int min = brute::bfvd_min(inst.g, inst.i, inst.j, inst.k);
        CHECK(v.yes == (min >= 0));
        if (v.yes) CHECK(static_cast<int>(v.witness.size()) == min);
        check_sound(inst, v);
    }
    CHECK_THROWS_AS(solve_oracle({Graph(17), 1, 1, 0}), SizeGuardError);
    CHECK(solve_oracle({Graph(17), 1, 1, 0}, {.allow_large = true}).yes);
}

TEST_CASE("verify_verdict rejects a bad witness") {
    BfvdInstance inst{brute::cycle(4), 1, 2, 2};
    Verdict bad;
    bad.yes = true;
    bad.witness = {1};
    CHECK_THROWS_AS(verify_verdict(inst, bad), IntegrityError);
    bad.witness = {1, 2, 3};
    CHECK_THROWS_AS(verify_verdict(inst, bad), IntegrityError);
}

TEST_CASE("vertex cover solver examples") {
    CHECK(solve_vc({brute::complete_bipartite(2, 3), 2, 3, 1}, {1, 2}).yes);
    Verdict forest = solve_vc({brute::path(6), 2, 3, 0}, {2, 4, 5});
    CHECK(forest.yes);
    CHECK(forest.witness.empty());
    CHECK_FALSE(solve_vc({brute::cycle(4), 1, 2, 1}, {1, 3}).yes);
    CHECK_THROWS_AS(solve_vc({brute::cycle(4), 1, 2, 1}, {1}), ContractError);
}

TEST_CASE("vertex cover solver handles twins outside the cover") {
    // K_{4,2} with i = 1, j = 3: the four degree-2 vertices are twins.
    BfvdInstance inst{brute::complete_bipartite(4, 2), 1, 3, 3};
    Verdict v = solve_vc(inst, {5, 6});
    CHECK(v.yes == brute::bfvd_yes(inst.g, 1, 3, 3));
    inst.k = 2;
    CHECK(solve_vc(inst, {5, 6}).yes == brute::bfvd_yes(inst.g, 1, 3, 2));
    // Covering with the twins instead of the hubs.
    CHECK(solve_vc(inst, {1, 2, 3, 4}).yes == brute::bfvd_yes(inst.g, 1, 3, 2));
}

TEST_CASE("branching examples") {
    Graph k22 = brute::complete_bipartite(2, 2);
    CHECK(solve_branching({k22, 2, 2, 1}).yes);
    CHECK_FALSE(solve_branching({brute::disjoint(k22, k22), 2, 2, 1}).yes);
    Verdict free = solve_branching({brute::path(5), 2, 2, 3});
    CHECK(free.yes);
    CHECK(free.witness.empty());
}

TEST_CASE("branching set example") {
    BfvdInstance inst{stars(8, 3), 1, 3, 1};
    auto w = find_branching_set(inst, 1);
    CHECK(w.threshold == 6);
    CHECK(w.x == VertexSet{1, 5, 9, 13, 17, 21});
    CHECK(w.u.empty());
    CHECK(w.w == w.x);
    inst.k = 2;
    CHECK_THROWS_AS(find_branching_set(inst, 1), ContractError);
    inst.k = 0;
    CHECK_THROWS_AS(find_branching_set(inst, 1), ContractError);
}

TEST_CASE("branching set meets every minimum witness and respects the neighbor bound") {
    Rng rng(42);
    int checked = 0;
    for (int round = 0; round < 3000 && checked < 60; ++round) {
        BfvdInstance inst{random_degenerate(rng.between(8, 14), rng.between(1, 2), rng), 1, rng.between(1, 3), 1};
        auto [g, trace] = reduce_biclique_membership(inst.g, inst.i, inst.j);
        inst.g = g;
        int d = degeneracy(g).d;
        if (g.empty() || inst.i > d || ss_value(g, inst.i, inst.j) <= (4 * d + 2) * inst.k) continue;
        ++checked;
        auto w = find_branching_set(inst, d);
        CHECK(static_cast<int>(w.u.size()) <= (4 * d + 2) * inst.k);
        CHECK(static_cast<int>(w.x.size()) < w.threshold + inst.i);
        CHECK(static_cast<int>(w.w.size()) <= (8 * d + 4) * inst.k + inst.i);
        // Every witness of size <= k must hit W.
        brute::each_subset(g.vertices(), inst.k, [&](const VertexSet& s) {
            if (!brute::has_biclique(g.without(s), inst.i, inst.j)) {
                bool hits = false;
                for (Vertex v : s) hits = hits || brute::contains(w.w, v);
                CHECK(hits);
            }
            return false;
        });
    }
    CHECK(checked > 0);
}

TEST_CASE("degenerate solver examples") {
    CHECK(solve_degenerate({brute::path(8), 2, 2, 0}).yes);
    Verdict k33 = solve_degenerate({brute::complete_bipartite(3, 3), 1, 3, 2});
    CHECK(k33.yes);
    CHECK(k33.witness.size() == 2);
    CHECK_FALSE(solve_degenerate({brute::complete_bipartite(3, 3), 1, 3, 1}).yes);
    CHECK_FALSE(solve_degenerate({stars(7, 3), 1, 3, 1}).yes);
    CHECK(solve_degenerate({stars(7, 3), 1, 3, 7}).yes);
}

TEST_CASE("feedback vertex solver examples") {
    Graph k23 = brute::complete_bipartite(2, 3);
    Verdict v = solve_fvn({k23, 2, 3, 1}, {1});
    CHECK(v.yes);
    CHECK(v.witness == VertexSet{1});
    Graph k22 = brute::complete_bipartite(2, 2);
    Graph two = brute::disjoint(k22, k22);
    CHECK_FALSE(solve_fvn({two, 2, 2, 1}, {1, 5}).yes);
    Verdict forest = solve_fvn({brute::path(6), 2, 2, 0}, {});
    CHECK(forest.yes);
    CHECK(forest.witness.empty());
    CHECK_THROWS_AS(solve_fvn({k23, 1, 3, 1}, {1}), UnsupportedParameter);
    CHECK_THROWS_AS(solve_fvn({brute::cycle(4), 2, 2, 0}, {}), ContractError);
}

TEST_CASE("all solvers agree with the oracle") {
    Rng rng(43);
    for (int round = 0; round < 400; ++round) {
        BfvdInstance inst = random_instance(rng, 9);
        bool expect = brute::bfvd_yes(inst.g, inst.i, inst.j, inst.k);
        CAPTURE(write_instance(inst));
        Verdict vc = solve(inst, {.strategy = Strategy::vc});
        CHECK(vc.yes == expect);
        check_sound(inst, vc);
        // solve_vc also accepts any vertex cover, e.g. all non-isolated vertices.
        VertexSet cover;
        for (Vertex v : inst.g.vertices())
            if (inst.g.degree(v) > 0) cover.push_back(v);
        CHECK(solve_vc(inst, cover).yes == expect);
        Verdict br = solve_branching(inst);
        CHECK(br.yes == expect);
        check_sound(inst, br);
        Verdict dg = solve_degenerate(inst);
        CHECK(dg.yes == expect);
        check_sound(inst, dg);
        if (inst.i >= 2) {
            Verdict fv = solve_fvn(inst, minimum_fvs(inst.g).fvs);
            CHECK(fv.yes == expect);
            check_sound(inst, fv);
            // A non-minimum feedback vertex set works too.
            VertexSet all = inst.g.vertices();
            CHECK(solve_fvn(inst, all).yes == expect);
        }
    }
}

TEST_CASE("feedback vertex solver pruning never loses a solution") {
    Rng rng(44);
    int rejections = 0, side_checks = 0;
    for (int round = 0; round < 400; ++round) {
        int f = rng.between(1, 3);
        int n = rng.between(f + 3, 11);
        BfvdInstance inst{forest_plus_hubs(n, f, 0.5, rng), 2, 0, rng.between(0, f - 1)};
        inst.j = rng.between(f + 2, f + 3);
        VertexSet d;
        for (int v = n - f + 1; v <= n; ++v) d.push_back(v);

        FvnProbe probe;
        probe.on_reject = [&](const FvnRejection& rej) {
            ++rejections;
            VertexSet pool = rej.reason == FvnRejection::Reason::many_r ? rej.forest
                                                                        : set_difference(rej.forest, rej.r_set);
            bool rescued = false;
            for (int size = 0; size <= rej.budget && !rescued; ++size)
                rescued = brute::each_subset(pool, size, [&](const VertexSet& s) {
                    return !brute::has_biclique(rej.graph.without(s), rej.i, rej.j);
                });
            CHECK_FALSE(rescued);
        };
        probe.on_sides = [&](const Graph&, const VertexSet& forest, const SmallerSideCollection& coll) {
            // With j > |D| + 1 no side holds two forest vertices.
            for (const auto& [side, _] : coll.sides) {
                int in_forest = 0;
                for (Vertex v : side) in_forest += brute::contains(forest, v);
                CHECK(in_forest <= 1);
                ++side_checks;
            }
        };
        Verdict v = solve_fvn(inst, d, {}, &probe);
        CHECK(v.yes == brute::bfvd_yes(inst.g, inst.i, inst.j, inst.k));
    }
    MESSAGE("rejections observed: " << rejections << ", sides checked: " << side_checks);
}

TEST_CASE("dispatcher") {
    BfvdInstance small{brute::cycle(5), 1, 2, 2};
    CHECK(solve(small).strategy == "oracle");
    CHECK_THROWS_AS(solve(small, {.strategy = Strategy::fvn}), UnsupportedParameter);
    CHECK(parse_strategy("degen") == Strategy::degen);
    CHECK_FALSE(parse_strategy("nope"));
    CHECK(to_string(Strategy::automatic) == "auto");

    Rng rng(45);
    BfvdInstance big{forest_plus_hubs(20, 2, 0.4, rng), 2, 4, 1};
    Verdict v = solve(big);
    CHECK(v.strategy == "fvn");
    CHECK(v.yes == solve_oracle(big, {.allow_large = true}).yes);
    BfvdInstance one{random_degenerate(20, 2, rng), 1, 3, 2};
    CHECK(solve(one).strategy == "degen");
    CHECK(solve(one).yes == solve_oracle(one, {.allow_large = true}).yes);
}

TEST_CASE("deadline stops the search") {
    Rng rng(46);
    BfvdInstance inst{random_graph(40, 0.5, rng), 1, 2, 30};
    CHECK_THROWS_AS(solve_branching(inst, Deadline(std::chrono::milliseconds(0))), TimeoutError);
}

}  // TEST_SUITE
