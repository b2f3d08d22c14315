#include <algorithm>
#include <set>

#include "bfvd/errors.hpp"
#include "bfvd/structure.hpp"
#include "bfvd/wbdd_kernel.hpp"

namespace bfvd {

namespace {

// Path v1..v_len whose inner vertices all have degree 2, starting v1 -> v2.
std::optional<std::vector<Vertex>> window_from(const Graph& g, Vertex v1, Vertex v2, std::size_t len) {
    std::vector<Vertex> path{v1};
    Vertex prev = v1, cur = v2;
    while (path.size() + 1 < len) {
        if (g.degree(cur) != 2) return std::nullopt;
        if (std::find(path.begin(), path.end(), cur) != path.end()) return std::nullopt;
        path.push_back(cur);
        auto nb = g.neighbors(cur);
        Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = nxt;
    }
    if (std::find(path.begin(), path.end(), cur) != path.end()) return std::nullopt;
    path.push_back(cur);
    return path;
}

std::optional<std::vector<int>> inner_offsets(const WbddInstance& inst, const std::vector<Vertex>& path) {
    std::vector<int> out;
    for (std::size_t q = 1; q + 1 < path.size(); ++q) {
        int o = inst.r - inst.weight(path[q]);
        if (o < 0 || o > 2) return std::nullopt;
        out.push_back(o);
    }
    return out;
}

// First applicable window of the given length (ascending v1, then v2).
std::optional<std::pair<std::vector<Vertex>, const ReplacementEntry*>> find_window(
    const WbddInstance& inst, std::size_t len, const std::map<std::vector<int>, ReplacementEntry>& table) {
    for (const auto& [v1, nbrs] : inst.g) {
        for (Vertex v2 : nbrs) {
            if (inst.g.degree(v2) != 2) continue;
            auto path = window_from(inst.g, v1, v2, len);
            if (!path) continue;
            auto offs = inner_offsets(inst, *path);
            if (!offs) continue;
            auto it = table.find(*offs);
            if (it == table.end() || !it->second.replacement) continue;
            return std::make_pair(std::move(*path), &it->second);
        }
    }
    return std::nullopt;
}

TraceEntry splice(const WbddInstance& inst, const std::vector<Vertex>& path, const ReplacementEntry& e) {
    TraceEntry t{.rule = Rule::path_replace};
    t.removed_vertices.assign(path.begin() + 1, path.end() - 1);
    std::sort(t.removed_vertices.begin(), t.removed_vertices.end());
    Vertex next_id = inst.g.max_vertex() + 1;
    Vertex prev = path.front();
    for (int o : *e.replacement) {
        t.added_vertices.emplace_back(next_id, inst.r - o);
        t.added_edges.push_back(make_edge(prev, next_id));
        prev = next_id++;
    }
    t.added_edges.push_back(make_edge(prev, path.back()));
    t.k_delta = -(e.opt - e.replacement_opt);
    return t;
}

}  // namespace

std::pair<WbddInstance, ReductionTrace> apply_path_rule(WbddInstance inst, const PathRuleTable& table) {
    if (inst.r < 2) throw UnsupportedParameter("path rule needs r >= 2");
    if (table.r != inst.r) throw ContractError("path-rule table was built for a different r");
    ReductionTrace trace;
    while (true) {
        auto hit = find_window(inst, 7, table.seven);
        if (!hit) hit = find_window(inst, 10, table.ten);
        if (!hit) break;
        TraceEntry e = splice(inst, hit->first, *hit->second);
        apply_entry(inst, e);
        trace.append(std::move(e));
    }
    return {std::move(inst), std::move(trace)};
}

std::pair<WbddInstance, ReductionTrace> remove_weights(WbddInstance inst) {
    ReductionTrace trace;
    auto all_positive = [&] {
        if (inst.g.empty() || inst.r <= 0) return false;
        for (const auto& [v, _] : inst.g)
            if (inst.weight(v) <= 0) return false;
        return true;
    };
    while (all_positive()) {
        TraceEntry e{.rule = Rule::weight_shift, .r_delta = -1};
        for (const auto& [v, _] : inst.g) e.weight_deltas.emplace_back(v, -1);
        apply_entry(inst, e);
        trace.append(std::move(e));
    }
    return {std::move(inst), std::move(trace)};
}

std::pair<BddInstance, ReductionTrace> expand_weights(const WbddInstance& inst) {
    TraceEntry e{.rule = Rule::weight_expand};
    Vertex next_id = inst.g.max_vertex() + 1;
    for (const auto& [v, _] : inst.g) {
        int wv = inst.weight(v);
        if (wv > inst.r) throw ContractError("weight above r; delete overweight vertices first");
        for (int q = 0; q < wv; ++q) {
            e.added_vertices.emplace_back(next_id, 0);
            e.added_edges.push_back(make_edge(v, next_id));
            ++next_id;
        }
        if (wv) e.weight_deltas.emplace_back(v, -wv);
    }
    WbddInstance out = inst;
    apply_entry(out, e);
    ReductionTrace trace;
    if (!e.added_vertices.empty()) trace.append(std::move(e));
    return {BddInstance{std::move(out.g), out.r, out.k}, std::move(trace)};
}

std::string to_string(Decision d) {
    switch (d) {
        case Decision::open: return "open";
        case Decision::yes: return "yes";
        case Decision::no: return "no";
    }
    return "open";
}

BddKernel kernelize_bdd(const Graph& g, int r, int k) {
    if (r < 0) throw ContractError("r must be non-negative");
    WbddInstance cur = to_wbdd(BddInstance{g, r, k});
    BddKernel out;
    std::map<int, PathRuleTable> tables;
    bool changed = true;
    while (changed) {
        changed = false;
        auto [a, ta] = apply_basic_rules(std::move(cur));
        cur = std::move(a);
        changed |= ta.size() > 0;
        out.trace.extend(ta);
        if (cur.r >= 2) {
            auto it = tables.find(cur.r);
            if (it == tables.end()) it = tables.emplace(cur.r, build_path_rule_table(cur.r)).first;
            auto [b, tb] = apply_path_rule(std::move(cur), it->second);
            cur = std::move(b);
            changed |= tb.size() > 0;
            out.trace.extend(tb);
        }
        auto [c, tc] = remove_weights(std::move(cur));
        cur = std::move(c);
        changed |= tc.size() > 0;
        out.trace.extend(tc);
    }
    out.weighted = cur;
    auto [bdd, te] = expand_weights(cur);
    out.trace.extend(te);
    out.instance = std::move(bdd);
    if (out.instance.k < 0)
        out.decided = Decision::no;
    else if (out.instance.g.empty())
        out.decided = Decision::yes;
    return out;
}

DegreeTwoStructure degree_two_structure(const Graph& g) {
    DegreeTwoStructure out;
    if (g.empty()) return out;
    out.min_degree = static_cast<int>(g.num_vertices());
    for (const auto& [v, nb] : g) {
        out.min_degree = std::min(out.min_degree, static_cast<int>(nb.size()));
        if (nb.size() >= 3) ++out.high_degree_vertices;
    }

    // Walks from every high-degree vertex along degree-2 vertices; each
    // maximal path or cycle through a high vertex is walked twice.
    int walks = 0;
    for (const auto& [h, nb] : g) {
        if (nb.size() < 3) continue;
        for (Vertex first : nb) {
            int len = 1;
            Vertex prev = h, cur = first;
            while (g.degree(cur) == 2) {
                ++len;
                auto cn = g.neighbors(cur);
                Vertex nxt = cn[0] == prev ? cn[1] : cn[0];
                prev = cur;
                cur = nxt;
            }
            if (cur != h) ++len;
            ++walks;
            out.longest_path_or_cycle = std::max(out.longest_path_or_cycle, len);
        }
    }
    out.maximal_paths_and_cycles = walks / 2;

    // Components made only of degree-2 vertices are cycles of their own.
    for (const auto& comp : connected_components(g)) {
        bool pure = std::all_of(comp.begin(), comp.end(), [&](Vertex v) { return g.degree(v) == 2; });
        if (pure) {
            ++out.maximal_paths_and_cycles;
            out.longest_path_or_cycle = std::max(out.longest_path_or_cycle, static_cast<int>(comp.size()));
        }
    }
    return out;
}

}  // namespace bfvd
