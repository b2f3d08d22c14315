#include "bfvd/graph.hpp"

#include <algorithm>
#include <iterator>

#include "bfvd/errors.hpp"

namespace bfvd {

Graph::Graph(Vertex n) {
    for (Vertex v = 1; v <= n; ++v) adj_.emplace_hint(adj_.end(), v, std::vector<Vertex>{});
}

void Graph::add_vertex(Vertex v) {
    if (v < 1) throw ContractError("vertex ids must be positive");
    if (!adj_.emplace(v, std::vector<Vertex>{}).second)
        throw ContractError("duplicate vertex " + std::to_string(v));
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (u == v) throw ContractError("self-loop at vertex " + std::to_string(u));
    auto iu = adj_.find(u);
    auto iv = adj_.find(v);
    if (iu == adj_.end() || iv == adj_.end())
        throw ContractError("edge endpoint not in graph");
    auto& nu = iu->second;
    auto pos = std::lower_bound(nu.begin(), nu.end(), v);
    if (pos != nu.end() && *pos == v)
        throw ContractError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    nu.insert(pos, v);
    auto& nv = iv->second;
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
}

void Graph::remove_vertex(Vertex v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw ContractError("no vertex " + std::to_string(v));
    for (Vertex u : it->second) {
        auto& nu = adj_.at(u);
        nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
    }
    edge_count_ -= it->second.size();
    adj_.erase(it);
}

void Graph::remove_edge(Vertex u, Vertex v) {
    if (!has_edge(u, v)) throw ContractError("no edge " + std::to_string(u) + " " + std::to_string(v));
    auto& nu = adj_.at(u);
    nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
    auto& nv = adj_.at(v);
    nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
    --edge_count_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && std::binary_search(it->second.begin(), it->second.end(), v);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw ContractError("no vertex " + std::to_string(v));
    return it->second;
}

VertexSet Graph::vertices() const {
    VertexSet out;
    out.reserve(adj_.size());
    for (const auto& [v, _] : adj_) out.push_back(v);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (const auto& [u, nbrs] : adj_)
        for (Vertex v : nbrs)
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::without(std::span<const Vertex> removed) const {
    Graph g = *this;
    for (Vertex v : removed)
        if (g.has_vertex(v)) g.remove_vertex(v);
    return g;
}

Graph Graph::induced(std::span<const Vertex> kept) const {
    Graph g;
    for (Vertex v : kept)
        if (has_vertex(v) && !g.has_vertex(v)) g.add_vertex(v);
    for (const auto& [u, nbrs] : g.adj_) {
        (void)nbrs;
        for (Vertex v : neighbors(u))
            if (u < v && g.has_vertex(v)) g.add_edge(u, v);
    }
    return g;
}

bool Graph::check_invariants() const {
    std::size_t half_edges = 0;
    for (const auto& [u, nbrs] : adj_) {
        if (u < 1) return false;
        if (!std::is_sorted(nbrs.begin(), nbrs.end())) return false;
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) return false;
        for (Vertex v : nbrs) {
            if (v == u) return false;
            auto it = adj_.find(v);
            if (it == adj_.end()) return false;
            if (!std::binary_search(it->second.begin(), it->second.end(), u)) return false;
        }
        half_edges += nbrs.size();
    }
    return half_edges == 2 * edge_count_;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

}  // namespace bfvd
