#include <algorithm>
#include <map>

#include "bfvd/bitgraph.hpp"
#include "bfvd/combinatorics.hpp"
#include "bfvd/solvers.hpp"
#include "bfvd/structure.hpp"

namespace bfvd {

Verdict solve_vc(const BfvdInstance& inst, const VertexSet& cover, const Deadline& deadline) {
    for (Vertex v : cover)
        if (!inst.g.has_vertex(v)) throw ContractError("cover names a vertex not in the graph");
    if (!is_vertex_cover(inst.g, cover)) throw ContractError("supplied set is not a vertex cover");

    Verdict out;
    out.strategy = "vc";
    if (inst.k < 0) return out;

    BitGraph bg(inst.g);
    std::vector<std::size_t> cover_idx;
    for (Vertex v : cover) cover_idx.push_back(bg.index(v));

    // Vertices outside the cover, grouped by neighborhood. Isolated ones are
    // never worth deleting.
    std::map<VertexSet, std::vector<std::size_t>> by_nbhd;
    for (Vertex v : inst.g.vertices()) {
        if (contains(cover, v) || inst.g.degree(v) == 0) continue;
        auto nb = inst.g.neighbors(v);
        by_nbhd[VertexSet(nb.begin(), nb.end())].push_back(bg.index(v));
    }
    std::vector<std::vector<std::size_t>> classes;
    for (auto& [_, members] : by_nbhd) classes.push_back(std::move(members));
    std::sort(classes.begin(), classes.end());

    Bits alive = bg.all();
    std::vector<std::size_t> deleted;
    bool found = false;

    auto check = [&]() {
        if ((++out.stats.nodes & 0x3FF) == 0) deadline.check();
        if (!bg.has_biclique(alive, inst.i, inst.j)) {
            found = true;
            for (auto idx : deleted) out.witness.push_back(bg.id(idx));
            std::sort(out.witness.begin(), out.witness.end());
        }
        return found;
    };

    // Distributes `rest` deletions over classes[c..] with per-class multiplicity.
    auto place = [&](auto&& self, std::size_t c, int rest) -> bool {
        if (rest == 0) return check();
        if (c == classes.size()) return false;
        const auto& members = classes[c];
        int most = std::min<int>(rest, static_cast<int>(members.size()));
        for (int take = most; take >= 0; --take) {
            for (int q = 0; q < take; ++q) {
                alive.reset(members[static_cast<std::size_t>(q)]);
                deleted.push_back(members[static_cast<std::size_t>(q)]);
            }
            bool hit = self(self, c + 1, rest - take);
            for (int q = 0; q < take; ++q) {
                alive.set(members[static_cast<std::size_t>(q)]);
                deleted.pop_back();
            }
            if (hit) return true;
        }
        return false;
    };

    for (int total = 0; total <= inst.k && !found; ++total) {
        const auto max_x = std::min<std::size_t>(static_cast<std::size_t>(total), cover_idx.size());
        for (std::size_t x = 0; x <= max_x && !found; ++x) {
            std::vector<std::size_t> pick(x);
            for (std::size_t q = 0; q < x; ++q) pick[q] = q;
            do {
                for (auto p : pick) {
                    alive.reset(cover_idx[p]);
                    deleted.push_back(cover_idx[p]);
                }
                place(place, 0, total - static_cast<int>(x));
                for (auto p : pick) {
                    alive.set(cover_idx[p]);
                    deleted.pop_back();
                }
            } while (!found && x > 0 && next_combination(pick, cover_idx.size()));
        }
    }
    out.yes = found;
    verify_verdict(inst, out);
    return out;
}

}  // namespace bfvd
