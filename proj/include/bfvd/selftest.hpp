#pragma once

#include <cstdint>
#include <ostream>

namespace bfvd {

/// Randomized property checks across all modules (solver agreement with the
/// oracle, kernel answer preservation, trace replay, format round trips,
/// the vertex-cover property of smaller sides, gadget equivalence). Prints
/// one line per suite and returns the number of violations.
int run_selftest(std::ostream& out, std::uint64_t seed, int rounds);

}  // namespace bfvd
