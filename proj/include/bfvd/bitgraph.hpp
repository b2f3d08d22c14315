#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "bfvd/graph.hpp"

namespace bfvd {

/// Fixed-width bit set sized at construction; the hot loops of the biclique
/// search and the brute-force solvers run on these.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set_all();

    std::size_t count() const;
    bool none() const;
    /// Index of the lowest set bit, or size() when empty.
    std::size_t first() const;
    /// Lowest set bit strictly after i, or size().
    std::size_t next(std::size_t i) const;

    Bits& operator&=(const Bits& o);
    /// this = a & b without allocating.
    void assign_and(const Bits& a, const Bits& b);
    /// popcount(this & o)
    std::size_t count_and(const Bits& o) const;

    friend bool operator==(const Bits&, const Bits&) = default;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word) {
                f(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
                word &= word - 1;
            }
        }
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense adjacency snapshot of a Graph. Index order equals ascending id order.
class BitGraph {
public:
    explicit BitGraph(const Graph& g);

    std::size_t size() const { return ids_.size(); }
    Vertex id(std::size_t idx) const { return ids_[idx]; }
    std::size_t index(Vertex v) const { return index_.at(v); }
    const Bits& row(std::size_t idx) const { return rows_[idx]; }
    Bits all() const;
    Bits mask_of(std::span<const Vertex> vs) const;

    /// Visits every smaller side S (|S| = i, >= j common neighbors among the
    /// alive vertices) exactly once, in no particular order. The callback
    /// receives S as ascending indices and the common neighborhood; returning
    /// false stops the enumeration.
    void for_each_side(const Bits& alive, int i, int j,
                       const std::function<bool(std::span<const std::size_t>, const Bits&)>& visit) const;

    /// Early-exit test for the existence of some K_{i,j} among alive vertices.
    bool has_biclique(const Bits& alive, int i, int j) const;

private:
    template <bool Dedupe, typename Visit>
    bool search(const Bits& alive, int i, int j, Visit&& visit) const;

    std::vector<Vertex> ids_;
    std::unordered_map<Vertex, std::size_t> index_;
    std::vector<Bits> rows_;
};

}  // namespace bfvd
