#include "bfvd/biclique.hpp"

#include <algorithm>
#include <set>

#include "bfvd/bitgraph.hpp"
#include "bfvd/errors.hpp"
#include "bfvd/structure.hpp"

namespace bfvd {

namespace {

void require_params(int i, int j) {
    if (i < 1 || i > j) throw ContractError("biclique parameters need 1 <= i <= j");
}

VertexSet ids_of(const BitGraph& bg, const Bits& bits) {
    VertexSet out;
    bits.for_each([&](std::size_t idx) { out.push_back(bg.id(idx)); });
    return out;
}

SmallerSideCollection reference_sides(const Graph& g, int i, int j) {
    SmallerSideCollection out{i, j, {}};
    BitGraph bg(g);
    bg.for_each_side(bg.all(), i, j, [&](std::span<const std::size_t> side, const Bits& common) {
        VertexSet s;
        for (auto idx : side) s.push_back(bg.id(idx));
        out.sides.emplace(std::move(s), ids_of(bg, common));
        return true;
    });
    return out;
}

void add_subsets(const BitGraph& bg, const std::vector<std::size_t>& pool, int i, int j,
                 SmallerSideCollection& out) {
    if (pool.size() < static_cast<std::size_t>(i)) return;
    std::vector<std::size_t> pick(static_cast<std::size_t>(i));
    std::vector<Bits> inter(static_cast<std::size_t>(i) + 1, bg.all());
    auto rec = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
        if (depth == pick.size()) {
            VertexSet s;
            for (auto idx : pick) s.push_back(bg.id(idx));
            if (!out.sides.contains(s)) out.sides.emplace(std::move(s), ids_of(bg, inter[depth]));
            return;
        }
        for (std::size_t p = from; p < pool.size(); ++p) {
            inter[depth + 1].assign_and(inter[depth], bg.row(pool[p]));
            if (inter[depth + 1].count() < static_cast<std::size_t>(j)) continue;
            pick[depth] = pool[p];
            self(self, depth + 1, p + 1);
        }
    };
    rec(rec, 0, 0);
}

// For a maximal biclique (A, B) let x be its earliest vertex in a degeneracy
// order; the other side lies inside x's later neighbors, which number <= d.
// So closing every nonempty subset of each later-neighborhood finds every
// maximal biclique. Both sides are then expanded into i-subsets.
SmallerSideCollection maximal_biclique_sides(const Graph& g, int i, int j) {
    SmallerSideCollection out{i, j, {}};
    if (g.empty()) return out;
    BitGraph bg(g);
    auto order = degeneracy(g).ordering;
    std::vector<std::size_t> pos(bg.size());
    for (std::size_t p = 0; p < order.size(); ++p) pos[bg.index(order[p])] = p;

    std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> seen;
    auto to_vec = [](const Bits& b) {
        std::vector<std::size_t> v;
        b.for_each([&](std::size_t idx) { v.push_back(idx); });
        return v;
    };
    auto common = [&](const Bits& set) {
        Bits c = bg.all();
        set.for_each([&](std::size_t idx) { c &= bg.row(idx); });
        return c;
    };

    for (std::size_t x = 0; x < bg.size(); ++x) {
        std::vector<std::size_t> later;
        bg.row(x).for_each([&](std::size_t u) {
            if (pos[u] > pos[x]) later.push_back(u);
        });
        if (later.size() > 24) throw ContractError("maximal-biclique backend needs degeneracy <= 24");
        const std::size_t subsets = std::size_t{1} << later.size();
        for (std::size_t mask = 1; mask < subsets; ++mask) {
            Bits b(bg.size());
            for (std::size_t q = 0; q < later.size(); ++q)
                if (mask >> q & 1U) b.set(later[q]);
            Bits a = common(b);
            if (a.none()) continue;
            Bits b_closed = common(a);
            auto va = to_vec(a), vb = to_vec(b_closed);
            if (vb < va) std::swap(va, vb);
            std::pair key{std::move(va), std::move(vb)};
            if (!seen.insert(key).second) continue;
            add_subsets(bg, key.first, i, j, out);
            add_subsets(bg, key.second, i, j, out);
        }
    }
    return out;
}

}  // namespace

VertexSet SmallerSideCollection::side_union() const {
    std::set<Vertex> u;
    for (const auto& [s, _] : sides) u.insert(s.begin(), s.end());
    return {u.begin(), u.end()};
}

SmallerSideCollection enumerate_smaller_sides(const Graph& g, int i, int j, SideBackend backend) {
    require_params(i, j);
    return backend == SideBackend::reference ? reference_sides(g, i, j) : maximal_biclique_sides(g, i, j);
}

std::optional<Biclique> find_biclique(const Graph& g, int i, int j) {
    auto coll = enumerate_smaller_sides(g, i, j);
    if (coll.empty()) return std::nullopt;
    const auto& [side, common] = *coll.sides.begin();
    return Biclique{side, VertexSet(common.begin(), common.begin() + j)};
}

bool contains_biclique(const Graph& g, int i, int j) {
    require_params(i, j);
    BitGraph bg(g);
    return bg.has_biclique(bg.all(), i, j);
}

std::pair<Graph, ReductionTrace> reduce_biclique_membership(const Graph& g, int i, int j) {
    require_params(i, j);
    Graph cur = g;
    ReductionTrace trace;
    while (true) {
        auto coll = enumerate_smaller_sides(cur, i, j);
        std::set<Vertex> keep_v;
        std::set<Edge> keep_e;
        for (const auto& [side, common] : coll.sides) {
            keep_v.insert(side.begin(), side.end());
            keep_v.insert(common.begin(), common.end());
            for (Vertex s : side)
                for (Vertex t : common) keep_e.insert(make_edge(s, t));
        }
        TraceEntry entry{.rule = Rule::biclique_membership};
        for (Vertex v : cur.vertices())
            if (!keep_v.contains(v)) entry.removed_vertices.push_back(v);
        for (const Edge& e : cur.edges())
            if (keep_v.contains(e.first) && keep_v.contains(e.second) && !keep_e.contains(e))
                entry.removed_edges.push_back(e);
        if (entry.removed_vertices.empty() && entry.removed_edges.empty()) break;
        for (Vertex v : entry.removed_vertices) cur.remove_vertex(v);
        for (const auto& [u, v] : entry.removed_edges) cur.remove_edge(u, v);
        trace.append(std::move(entry));
    }
    return {std::move(cur), std::move(trace)};
}

int ss_value(const Graph& g, int i, int j) {
    return static_cast<int>(enumerate_smaller_sides(g, i, j).side_union().size());
}

}  // namespace bfvd
