#include "bfvd/biclique.hpp"
#include "bfvd/bitgraph.hpp"
#include "bfvd/errors.hpp"
#include "bfvd/generators.hpp"
#include "bfvd/structure.hpp"
#include "doctest.h"
#include "support/brute.hpp"

using namespace bfvd;

namespace {

// K_{2,3} with 2-side {1,2}, plus pendant 6 on vertex 1.
Graph k23_with_pendant() {
    Graph g = brute::complete_bipartite(2, 3);
    g.add_vertex(6);
    g.add_edge(1, 6);
    return g;
}

}  // namespace

TEST_SUITE("biclique-engine") {

TEST_CASE("smaller sides examples") {
    auto k23 = enumerate_smaller_sides(brute::complete_bipartite(2, 3), 2, 3);
    REQUIRE(k23.size() == 1);
    CHECK(k23.sides.begin()->first == VertexSet{1, 2});
    CHECK(k23.sides.begin()->second == VertexSet{3, 4, 5});

    auto c4 = enumerate_smaller_sides(brute::cycle(4), 1, 2);
    CHECK(c4.size() == 4);
    CHECK(c4.side_union() == VertexSet{1, 2, 3, 4});

    CHECK(enumerate_smaller_sides(brute::path(6), 2, 2).empty());
    CHECK_THROWS_AS(enumerate_smaller_sides(brute::path(3), 2, 1), ContractError);
    CHECK_THROWS_AS(enumerate_smaller_sides(brute::path(3), 0, 1), ContractError);
}

TEST_CASE("both backends match brute force") {
    Rng rng(31);
    for (int round = 0; round < 300; ++round) {
        Graph g = random_graph(rng.between(0, 10), 0.1 * rng.between(1, 8), rng);
        int j = rng.between(1, 4), i = rng.between(1, j);
        auto expect = brute::smaller_sides(g, i, j);
        CHECK(enumerate_smaller_sides(g, i, j).sides == expect);
        CHECK(enumerate_smaller_sides(g, i, j, SideBackend::maximal_bicliques).sides == expect);
    }
}

TEST_CASE("maximal biclique backend covers sides inside a larger side") {
    // K_{2,5} with i = j = 2: ten of the eleven sides are pairs from the
    // five-vertex side of the only maximal biclique.
    Graph g = brute::complete_bipartite(2, 5);
    auto sides = enumerate_smaller_sides(g, 2, 2, SideBackend::maximal_bicliques);
    CHECK(sides.sides == brute::smaller_sides(g, 2, 2));
    CHECK(sides.size() == 11);
}

TEST_CASE("degenerate graphs have no K_{d+1,d+1}") {
    Rng rng(32);
    for (int round = 0; round < 100; ++round) {
        Graph g = random_graph(rng.between(1, 12), 0.1 * rng.between(1, 9), rng);
        int d = degeneracy(g).d;
        CHECK(enumerate_smaller_sides(g, d + 1, d + 1).empty());
    }
}

TEST_CASE("contains and find biclique") {
    CHECK(contains_biclique(brute::complete_bipartite(3, 3), 3, 3));
    CHECK_FALSE(contains_biclique(brute::path(7), 2, 2));
    CHECK_FALSE(contains_biclique(brute::complete_bipartite(2, 3), 2, 4));
    auto b = find_biclique(brute::complete_bipartite(2, 3), 2, 2);
    REQUIRE(b);
    CHECK(b->smaller == VertexSet{1, 2});
    CHECK(b->larger == VertexSet{3, 4});
    CHECK_FALSE(find_biclique(brute::path(4), 2, 2));

    Rng rng(33);
    for (int round = 0; round < 300; ++round) {
        Graph g = random_graph(rng.between(0, 11), 0.1 * rng.between(1, 8), rng);
        int j = rng.between(1, 4), i = rng.between(1, j);
        bool expect = brute::has_biclique(g, i, j);
        CHECK(contains_biclique(g, i, j) == expect);
        auto found = find_biclique(g, i, j);
        CHECK(found.has_value() == expect);
        if (found) {
            CHECK(found->smaller.size() == static_cast<std::size_t>(i));
            CHECK(found->larger.size() == static_cast<std::size_t>(j));
            for (Vertex s : found->smaller)
                for (Vertex t : found->larger) CHECK(g.has_edge(s, t));
        }
    }
}

TEST_CASE("bitset rows") {
    Bits a(130), b(130);
    a.set(3);
    a.set(129);
    b.set(129);
    CHECK(a.count() == 2);
    CHECK(a.count_and(b) == 1);
    CHECK(a.first() == 3);
    CHECK(a.next(3) == 129);
    a &= b;
    CHECK(a.count() == 1);
    CHECK(a.test(129));
}

TEST_CASE("membership rule examples") {
    auto [p3, t1] = reduce_biclique_membership(brute::path(3), 1, 2);
    CHECK(p3 == brute::path(3));
    CHECK(t1.size() == 0);

    auto [gone, t2] = reduce_biclique_membership(brute::path(3), 1, 3);
    CHECK(gone.empty());

    auto [kept, t3] = reduce_biclique_membership(k23_with_pendant(), 2, 3);
    CHECK(kept == brute::complete_bipartite(2, 3));
    CHECK(t3.count(Rule::biclique_membership) >= 1);
}

TEST_CASE("membership rule keeps exactly the biclique members and reaches a fixpoint") {
    Rng rng(34);
    for (int round = 0; round < 200; ++round) {
        Graph g = random_graph(rng.between(0, 10), 0.1 * rng.between(1, 8), rng);
        int j = rng.between(1, 4), i = rng.between(1, j);
        auto [h, trace] = reduce_biclique_membership(g, i, j);
        CHECK(replay(g, trace) == h);

        // At the fixpoint every vertex and edge lies in some K_{i,j}.
        auto sides = brute::smaller_sides(h, i, j);
        for (Vertex v : h.vertices()) {
            bool member = false;
            for (const auto& [s, c] : sides) member = member || brute::contains(s, v) || brute::contains(c, v);
            CHECK(member);
        }
        for (auto [u, v] : h.edges()) {
            bool member = false;
            for (const auto& [s, c] : sides)
                member = member || (brute::contains(s, u) && brute::contains(c, v)) ||
                         (brute::contains(s, v) && brute::contains(c, u));
            CHECK(member);
        }
        // Nothing that lay in a biclique of g was removed.
        for (const auto& [s, c] : brute::smaller_sides(g, i, j))
            for (Vertex v : s) CHECK(h.has_vertex(v));

        auto [again, t2] = reduce_biclique_membership(h, i, j);
        CHECK(again == h);
        CHECK(t2.size() == 0);

        // Union of smaller sides covers every remaining edge.
        CHECK(is_vertex_cover(h, enumerate_smaller_sides(h, i, j).side_union()));
        // Deleting non-members never changes the answer.
        int k = rng.between(0, 2);
        CHECK(brute::bfvd_yes(g, i, j, k) == brute::bfvd_yes(h, i, j, k));
    }
}

TEST_CASE("ss values") {
    CHECK(ss_value(brute::complete_bipartite(2, 3), 2, 3) == 2);
    CHECK(ss_value(brute::cycle(4), 1, 2) == 4);
    CHECK(ss_value(brute::path(5), 2, 2) == 0);
}

}  // TEST_SUITE
