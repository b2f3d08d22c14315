#include "bfvd/bitgraph.hpp"

namespace bfvd {

void Bits::set_all() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    if (n_ & 63) words_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
}

std::size_t Bits::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool Bits::none() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

std::size_t Bits::first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return n_;
}

std::size_t Bits::next(std::size_t i) const {
    ++i;
    if (i >= n_) return n_;
    std::size_t w = i >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (i & 63));
    while (true) {
        if (word) return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        if (++w == words_.size()) return n_;
        word = words_[w];
    }
}

Bits& Bits::operator&=(const Bits& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
}

void Bits::assign_and(const Bits& a, const Bits& b) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] = a.words_[w] & b.words_[w];
}

std::size_t Bits::count_and(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) c += static_cast<std::size_t>(std::popcount(words_[w] & o.words_[w]));
    return c;
}

BitGraph::BitGraph(const Graph& g) : ids_(g.vertices()) {
    index_.reserve(ids_.size());
    for (std::size_t idx = 0; idx < ids_.size(); ++idx) index_.emplace(ids_[idx], idx);
    rows_.assign(ids_.size(), Bits(ids_.size()));
    for (std::size_t idx = 0; idx < ids_.size(); ++idx)
        for (Vertex u : g.neighbors(ids_[idx])) rows_[idx].set(index_.at(u));
}

Bits BitGraph::all() const {
    Bits b(size());
    b.set_all();
    return b;
}

Bits BitGraph::mask_of(std::span<const Vertex> vs) const {
    Bits b(size());
    for (Vertex v : vs) b.set(index(v));
    return b;
}

// Every smaller side S has a common neighbor t, so S is an i-subset of N(t).
// With Dedupe, S is only reported from its lowest common neighbor.
template <bool Dedupe, typename Visit>
bool BitGraph::search(const Bits& alive, int i, int j, Visit&& visit) const {
    if (i < 1 || j < 1 || size() == 0) return true;
    const auto need = static_cast<std::size_t>(j);
    std::vector<Bits> inter(static_cast<std::size_t>(i) + 1, Bits(size()));
    Bits cand(size());
    std::vector<std::size_t> side(static_cast<std::size_t>(i));

    // depth = number of side vertices already chosen; the next one is taken
    // from cand at or above `from`.
    std::function<bool(std::size_t, std::size_t, std::size_t)> extend =
        [&](std::size_t depth, std::size_t from, std::size_t t) -> bool {
        if (depth == static_cast<std::size_t>(i)) {
            if (Dedupe && inter[depth].first() != t) return true;
            return visit(std::span<const std::size_t>(side), inter[depth]);
        }
        for (std::size_t s = from; s < size(); s = cand.next(s)) {
            inter[depth + 1].assign_and(inter[depth], rows_[s]);
            if (inter[depth + 1].count() < need) continue;
            side[depth] = s;
            if (!extend(depth + 1, cand.next(s), t)) return false;
        }
        return true;
    };

    for (std::size_t t = alive.first(); t < size(); t = alive.next(t)) {
        cand.assign_and(rows_[t], alive);
        if (cand.count() < static_cast<std::size_t>(i)) continue;
        inter[0] = alive;
        if (!extend(0, cand.first(), t)) return false;
    }
    return true;
}

void BitGraph::for_each_side(const Bits& alive, int i, int j,
                             const std::function<bool(std::span<const std::size_t>, const Bits&)>& visit) const {
    search<true>(alive, i, j, visit);
}

bool BitGraph::has_biclique(const Bits& alive, int i, int j) const {
    bool found = false;
    search<false>(alive, i, j, [&](std::span<const std::size_t>, const Bits&) {
        found = true;
        return false;
    });
    return found;
}

}  // namespace bfvd
