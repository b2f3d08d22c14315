#pragma once

#include <optional>
#include <vector>

#include "bfvd/instance.hpp"
#include "bfvd/trace.hpp"

namespace bfvd {

/// For i >= 2: deletes vertices of degree <= 1 and the middle vertex of every
/// path v1..v5 whose v2, v3, v4 have degree 2 (five distinct vertices), until
/// neither applies. i, j and k are unchanged.
std::pair<BfvdInstance, ReductionTrace> kernelize_bfvd(const BfvdInstance& inst);

/// First path v1..v5 (ascending v3) eligible for middle deletion, if any.
std::optional<std::vector<Vertex>> find_middle_of_five(const Graph& g);

}  // namespace bfvd
