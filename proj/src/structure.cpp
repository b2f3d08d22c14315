#include "bfvd/structure.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

#include "bfvd/errors.hpp"

namespace bfvd {

DegeneracyResult degeneracy(const Graph& g) {
    DegeneracyResult result;
    std::map<Vertex, int> deg;
    std::set<std::pair<int, Vertex>> queue;
    for (const auto& [v, nbrs] : g) {
        deg[v] = static_cast<int>(nbrs.size());
        queue.emplace(deg[v], v);
    }
    std::set<Vertex> removed;
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        result.d = std::max(result.d, d);
        result.ordering.push_back(v);
        removed.insert(v);
        for (Vertex u : g.neighbors(v)) {
            if (removed.contains(u)) continue;
            queue.erase({deg[u], u});
            queue.emplace(--deg[u], u);
        }
    }
    return result;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::set<Vertex> seen;
    for (const auto& [root, _] : g) {
        if (seen.contains(root)) continue;
        VertexSet comp;
        std::deque<Vertex> frontier{root};
        seen.insert(root);
        while (!frontier.empty()) {
            Vertex v = frontier.front();
            frontier.pop_front();
            comp.push_back(v);
            for (Vertex u : g.neighbors(v))
                if (seen.insert(u).second) frontier.push_back(u);
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

int count_components(const Graph& g) { return static_cast<int>(connected_components(g).size()); }

FeedbackEdges feedback_edge_data(const Graph& g) {
    FeedbackEdges out;
    std::set<Vertex> seen;
    std::set<Edge> tree;
    for (const auto& [root, _] : g) {
        if (seen.contains(root)) continue;
        std::deque<Vertex> frontier{root};
        seen.insert(root);
        while (!frontier.empty()) {
            Vertex v = frontier.front();
            frontier.pop_front();
            for (Vertex u : g.neighbors(v)) {
                if (seen.insert(u).second) {
                    tree.insert(make_edge(u, v));
                    frontier.push_back(u);
                }
            }
        }
    }
    for (const Edge& e : g.edges())
        if (!tree.contains(e)) out.edges.push_back(e);
    out.fen = static_cast<int>(out.edges.size());
    return out;
}

bool is_forest(const Graph& g) {
    return g.num_edges() + static_cast<std::size_t>(count_components(g)) == g.num_vertices();
}

bool is_feedback_vertex_set(const Graph& g, const VertexSet& d) { return is_forest(g.without(d)); }

bool is_vertex_cover(const Graph& g, const VertexSet& cover) {
    for (const auto& [u, v] : g.edges())
        if (!contains(cover, u) && !contains(cover, v)) return false;
    return true;
}

namespace {

// Degree <= 1 deletion plus degree-2 bypass, which never changes the minimum
// feedback vertex set size. A bypass is skipped when the two neighbors are
// already adjacent (it would need a parallel edge). Degree-2 vertices are
// tried from the highest id down so low ids survive to be branched on.
void reduce_for_fvs(Graph& g) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v : g.vertices()) {
            if (g.has_vertex(v) && g.degree(v) <= 1) {
                g.remove_vertex(v);
                changed = true;
            }
        }
        VertexSet vs = g.vertices();
        for (auto it = vs.rbegin(); it != vs.rend(); ++it) {
            Vertex v = *it;
            if (!g.has_vertex(v) || g.degree(v) != 2) continue;
            Vertex a = g.neighbors(v)[0];
            Vertex b = g.neighbors(v)[1];
            if (g.has_edge(a, b)) continue;
            g.remove_vertex(v);
            g.add_edge(a, b);
            changed = true;
        }
    }
}

// Vertex set of a shortest cycle (BFS from every vertex).
VertexSet shortest_cycle(const Graph& g) {
    VertexSet best;
    std::size_t best_len = std::numeric_limits<std::size_t>::max();
    for (const auto& [root, _] : g) {
        std::map<Vertex, int> dist;
        std::map<Vertex, Vertex> parent;
        std::deque<Vertex> frontier{root};
        dist[root] = 0;
        while (!frontier.empty()) {
            Vertex v = frontier.front();
            frontier.pop_front();
            for (Vertex u : g.neighbors(v)) {
                if (!dist.contains(u)) {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    frontier.push_back(u);
                } else if (parent.contains(v) && parent[v] == u) {
                    continue;
                } else {
                    std::size_t len = static_cast<std::size_t>(dist[u] + dist[v] + 1);
                    if (len < best_len) {
                        best_len = len;
                        std::set<Vertex> cyc;
                        for (Vertex x = u;; x = parent[x]) {
                            cyc.insert(x);
                            if (x == root) break;
                        }
                        for (Vertex x = v;; x = parent[x]) {
                            cyc.insert(x);
                            if (x == root) break;
                        }
                        best.assign(cyc.begin(), cyc.end());
                    }
                }
            }
        }
    }
    return best;
}

bool fvs_search(Graph g, int budget, VertexSet& chosen) {
    reduce_for_fvs(g);
    if (g.empty()) return true;
    if (budget == 0) return false;
    for (Vertex v : shortest_cycle(g)) {
        chosen.push_back(v);
        Graph next = g;
        next.remove_vertex(v);
        if (fvs_search(std::move(next), budget - 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

FvsResult minimum_fvs(const Graph& g, std::optional<int> budget) {
    int limit = budget.value_or(static_cast<int>(g.num_vertices()));
    for (int size = 0; size <= limit; ++size) {
        VertexSet chosen;
        if (fvs_search(g, size, chosen)) {
            std::sort(chosen.begin(), chosen.end());
            if (!is_feedback_vertex_set(g, chosen))
                throw IntegrityError("feedback vertex set search returned a non-solution");
            return {FvsResult::Status::found, chosen};
        }
    }
    return {FvsResult::Status::budget_exhausted, {}};
}

}  // namespace bfvd
