#include "bfvd/errors.hpp"
#include "bfvd/generators.hpp"
#include "bfvd/reductions.hpp"
#include "bfvd/solvers.hpp"
#include "doctest.h"
#include "support/brute.hpp"

using namespace bfvd;

TEST_SUITE("reductions") {

TEST_CASE("bounded degree as biclique deletion") {
    BfvdInstance a = bdd_as_bfvd({brute::cycle(4), 1, 2});
    CHECK(a.i == 1);
    CHECK(a.j == 2);
    CHECK(a.k == 2);
    BfvdInstance vc = bdd_as_bfvd({brute::path(3), 0, 1});
    CHECK(vc.j == 1);
    Rng rng(71);
    for (int round = 0; round < 200; ++round) {
        BddInstance inst{random_graph(rng.between(0, 9), 0.4, rng), rng.between(0, 3), rng.between(0, 3)};
        BfvdInstance b = bdd_as_bfvd(inst);
        CHECK(solve_oracle(b).yes == brute::bdd_yes(inst.g, inst.r, inst.k));
        CHECK(solve_bdd_oracle(inst).yes == brute::bdd_yes(inst.g, inst.r, inst.k));
    }
}

TEST_CASE("gadget on a triangle") {
    GadgetLayout lay;
    BfvdInstance g = hardness_gadget({brute::cycle(3), 1, 1}, 2, &lay);
    CHECK(g.j == 5);
    CHECK(g.i == 2);
    CHECK(g.g.num_vertices() == 15);
    CHECK(lay.blocks.size() == 3);
    CHECK(solve_oracle(g, {.allow_large = true}).yes);
    g.k = 0;
    CHECK_FALSE(solve_oracle(g, {.allow_large = true}).yes);
    CHECK(brute::bdd_yes(brute::cycle(3), 1, 1));
    CHECK_FALSE(brute::bdd_yes(brute::cycle(3), 1, 0));
}

TEST_CASE("gadget structure") {
    Rng rng(72);
    for (int round = 0; round < 40; ++round) {
        int i = rng.between(2, 3);
        int n = rng.between(i + 1, 6);
        BddInstance inst{random_graph(n, 0.5, rng), rng.between(0, 2), 1};
        GadgetLayout lay;
        BfvdInstance g = hardness_gadget(inst, i, &lay);
        CHECK(static_cast<int>(g.g.num_vertices()) == n * i + n * n);
        CHECK(g.j == n + inst.r + 1);
        Vertex expect = n + 1;
        for (const auto& [v, parts] : lay.blocks) {
            const auto& [s, t] = parts;
            CHECK(static_cast<int>(s.size()) == i - 1);
            CHECK(static_cast<int>(t.size()) == n);
            // Consecutive fresh ids per original vertex.
            CHECK(s.front() == expect);
            expect += i - 1 + n;
            VertexSet side = s;
            side.push_back(v);
            for (Vertex x : side)
                for (Vertex y : t) CHECK(g.g.has_edge(x, y));
            for (Vertex u : inst.g.neighbors(v))
                for (Vertex x : s) CHECK(g.g.has_edge(u, x));
        }
        for (auto [u, v] : inst.g.edges()) CHECK(g.g.has_edge(u, v));
    }
}

TEST_CASE("gadget preconditions") {
    CHECK_THROWS_AS(hardness_gadget({brute::path(2), 0, 0}, 2), ContractError);
    CHECK_THROWS_AS(hardness_gadget({brute::path(4), 0, 0}, 1), ContractError);
}

TEST_CASE("gadget equivalence on small graphs") {
    Rng rng(73);
    for (int round = 0; round < 60; ++round) {
        int i = rng.between(2, 3);
        BddInstance inst{random_graph(rng.between(i + 1, 5), 0.5, rng), rng.between(0, 2), rng.between(0, 3)};
        BfvdInstance g = hardness_gadget(inst, i);
        CHECK(brute::bdd_yes(inst.g, inst.r, inst.k) == solve_oracle(g, {.allow_large = true}).yes);
    }
}

}  // TEST_SUITE
