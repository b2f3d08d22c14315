#pragma once

#include <cstddef>
#include <vector>

namespace bfvd {

/// Advances `pick` (strictly increasing indices into [0, n)) to the next
/// combination in lexicographic order. Returns false after the last one.
inline bool next_combination(std::vector<std::size_t>& pick, std::size_t n) {
    const std::size_t k = pick.size();
    for (std::size_t pos = k; pos-- > 0;) {
        if (pick[pos] < n - k + pos) {
            ++pick[pos];
            for (std::size_t q = pos + 1; q < k; ++q) pick[q] = pick[q - 1] + 1;
            return true;
        }
    }
    return false;
}

/// Calls f(pick) for every subset of [0, n) with at most max_size elements,
/// by increasing size and lexicographically within a size, until f returns true.
/// Returns whether some call returned true.
template <typename F>
bool for_each_subset_upto(std::size_t n, std::size_t max_size, F&& f) {
    for (std::size_t size = 0; size <= max_size && size <= n; ++size) {
        std::vector<std::size_t> pick(size);
        for (std::size_t q = 0; q < size; ++q) pick[q] = q;
        do {
            if (f(static_cast<const std::vector<std::size_t>&>(pick))) return true;
        } while (size > 0 && next_combination(pick, n));
    }
    return false;
}

}  // namespace bfvd
