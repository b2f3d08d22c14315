#pragma once

#include <array>
#include <compare>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bfvd/instance.hpp"
#include "bfvd/trace.hpp"

namespace bfvd {

// ---- degree/weight rules ---------------------------------------------------

/// Exhaustive worklist application of the four degree/weight rules (raise a
/// slack weight, delete an overweight vertex, delete a saturated isolated
/// vertex, resolve a pendant vertex). Afterwards every vertex has
/// r - deg(v) <= w(v) <= r and degree >= 2. k may become negative.
std::pair<WbddInstance, ReductionTrace> apply_basic_rules(WbddInstance inst);

// ---- weighted paths ----------------------------------------------------------

inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Vertex weights along a path v1..vl (absolute, not offsets).
struct WeightedPath {
    std::vector<int> weights;
    std::size_t length() const { return weights.size(); }
};

/// Minimum deletions so that every kept vertex has kept-degree <= r - w.
/// Throws ContractError if some weight exceeds r.
int opt_path(const WeightedPath& p, int r);

/// Same optimum with some vertices forced in (true) or out (false) of the
/// deletion set; kInfinity when no such set exists.
int constrained_opt_path(const WeightedPath& p, int r, std::span<const std::optional<bool>> forced);

/// 3x3 matrix of constrained optima minus the optimum. Row x / column y pick
/// how the first / last two vertices meet the deletion set: 1 = endpoint
/// deleted, 2 = endpoint kept and its neighbor deleted, 3 = both kept.
struct CharacteristicMatrix {
    std::array<int, 9> entries{};  // row-major, kInfinity for infeasible

    int at(int x, int y) const { return entries[static_cast<std::size_t>((x - 1) * 3 + (y - 1))]; }
    friend auto operator<=>(const CharacteristicMatrix&, const CharacteristicMatrix&) = default;
};

std::string to_string(const CharacteristicMatrix& m);

/// Requires length >= 5 and r >= 2.
CharacteristicMatrix characteristic_matrix(const WeightedPath& p, int r);

/// Member of the path family for the given inner offsets (offset o means
/// weight r - o, o in {0, 1, 2}); both endpoints get weight r - 1.
WeightedPath path_from_offsets(std::span<const int> inner_offsets, int r);

/// Every inner-offset pattern of the given length, in lexicographic order.
std::vector<std::vector<int>> offset_patterns(std::size_t path_length);

// ---- replacement tables ------------------------------------------------------

struct ReplacementEntry {
    std::vector<int> pattern;  // inner offsets of the long path
    CharacteristicMatrix matrix;
    int opt = 0;
    std::optional<std::vector<int>> replacement;  // inner offsets of the chosen shorter path
    int replacement_opt = 0;
};

struct MatrixClass {
    CharacteristicMatrix matrix;
    std::size_t members = 0;
    std::optional<std::vector<int>> replacement;
};

/// Classification of every member of the long path family against the
/// members of shorter lengths [min_short, max_short], picking the shortest,
/// then lexicographically first (by offsets) match.
struct ReplacementSurvey {
    int r = 2;
    std::size_t long_length = 7;
    std::size_t min_short = 6, max_short = 6;
    std::vector<ReplacementEntry> entries;
    std::vector<MatrixClass> classes;  // sorted by matrix
    std::size_t unmatched = 0;

    std::size_t distinct_matrices() const { return classes.size(); }
};

ReplacementSurvey survey_replacements(int r, std::size_t long_length, std::size_t min_short, std::size_t max_short);

/// The strict seven-to-six table. Throws IntegrityError when some seven-vertex
/// pattern has no six-vertex path with an equal matrix.
struct ReplacementTable {
    int r = 2;
    std::map<std::vector<int>, ReplacementEntry> by_pattern;
    std::size_t distinct_matrices = 0;
};

ReplacementTable build_replacement_table(int r);

/// Table actually used by the path rule: seven-vertex windows with a
/// six-vertex match, and (always total) ten-vertex windows mapped to the
/// shortest matching path of five to nine vertices.
struct PathRuleTable {
    int r = 2;
    std::map<std::vector<int>, ReplacementEntry> seven;
    std::map<std::vector<int>, ReplacementEntry> ten;
};

PathRuleTable build_path_rule_table(int r);

/// Replaces degree-2 windows by shorter equivalent ones until none applies.
/// Endpoints keep their weights; k drops by the optimum difference.
/// Requires r >= 2 and a table built for inst.r.
std::pair<WbddInstance, ReductionTrace> apply_path_rule(WbddInstance inst, const PathRuleTable& table);

/// While every weight is positive: decrement all weights and r.
std::pair<WbddInstance, ReductionTrace> remove_weights(WbddInstance inst);

/// Attaches w(v) fresh pendant vertices to every v (new ids above the current
/// maximum, in ascending order of v).
std::pair<BddInstance, ReductionTrace> expand_weights(const WbddInstance& inst);

enum class Decision { open, yes, no };
std::string to_string(Decision d);

struct BddKernel {
    BddInstance instance;   // answer-equivalent unweighted instance
    WbddInstance weighted;  // fixpoint before weight expansion
    ReductionTrace trace;   // replays the original (zero weights) into `instance`
    Decision decided = Decision::open;
};

BddKernel kernelize_bdd(const Graph& g, int r, int k);

// ---- shape of min-degree-2 graphs -------------------------------------------

struct DegreeTwoStructure {
    int min_degree = 0;
    int high_degree_vertices = 0;        // degree >= 3
    int maximal_paths_and_cycles = 0;
    int longest_path_or_cycle = 0;       // in vertices, endpoints included
};

DegreeTwoStructure degree_two_structure(const Graph& g);

}  // namespace bfvd
