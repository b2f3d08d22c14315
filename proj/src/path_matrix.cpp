#include <algorithm>
#include <sstream>

#include "bfvd/errors.hpp"
#include "bfvd/wbdd_kernel.hpp"

namespace bfvd {

int constrained_opt_path(const WeightedPath& p, int r, std::span<const std::optional<bool>> forced) {
    const std::size_t n = p.length();
    if (forced.size() != n) throw ContractError("forced-membership vector has the wrong length");
    for (int w : p.weights)
        if (w > r) throw ContractError("path weight exceeds r; delete overweight vertices first");
    if (n == 0) return 0;

    // State after deciding vertex t: (t-1 kept, t kept). A kept vertex is
    // checked once its right neighbor is decided.
    auto allowed = [&](std::size_t t, bool deleted) {
        return !forced[t] || *forced[t] == deleted;
    };
    std::array<std::array<int, 2>, 2> cost{};
    for (auto& row : cost) row.fill(kInfinity);
    for (int kept = 0; kept < 2; ++kept)
        if (allowed(0, !kept)) cost[0][static_cast<std::size_t>(kept)] = kept ? 0 : 1;

    for (std::size_t t = 1; t < n; ++t) {
        std::array<std::array<int, 2>, 2> next{};
        for (auto& row : next) row.fill(kInfinity);
        for (int prev = 0; prev < 2; ++prev) {
            for (int cur = 0; cur < 2; ++cur) {
                int c = cost[static_cast<std::size_t>(prev)][static_cast<std::size_t>(cur)];
                if (c == kInfinity) continue;
                for (int nxt = 0; nxt < 2; ++nxt) {
                    if (!allowed(t, !nxt)) continue;
                    if (cur && prev + nxt > r - p.weights[t - 1]) continue;
                    int& slot = next[static_cast<std::size_t>(cur)][static_cast<std::size_t>(nxt)];
                    slot = std::min(slot, c + (nxt ? 0 : 1));
                }
            }
        }
        cost = next;
    }
    int best = kInfinity;
    for (int prev = 0; prev < 2; ++prev)
        for (int cur = 0; cur < 2; ++cur) {
            int c = cost[static_cast<std::size_t>(prev)][static_cast<std::size_t>(cur)];
            if (c == kInfinity) continue;
            if (cur && prev > r - p.weights[n - 1]) continue;
            best = std::min(best, c);
        }
    return best;
}

int opt_path(const WeightedPath& p, int r) {
    std::vector<std::optional<bool>> free(p.length());
    return constrained_opt_path(p, r, free);
}

CharacteristicMatrix characteristic_matrix(const WeightedPath& p, int r) {
    const std::size_t n = p.length();
    if (n < 5) throw ContractError("characteristic matrix needs a path on at least 5 vertices");
    if (r < 2) throw UnsupportedParameter("characteristic matrix needs r >= 2");
    const int base = opt_path(p, r);
    CharacteristicMatrix m;
    std::vector<std::optional<bool>> forced(n);
    // (endpoint, neighbor) membership per case: 1 = endpoint deleted,
    // 2 = endpoint kept and neighbor deleted, 3 = both kept.
    auto end_case = [&](int c, std::size_t end, std::size_t nb) {
        forced[end].reset();
        forced[nb].reset();
        if (c == 1) forced[end] = true;
        if (c == 2) forced[end] = false, forced[nb] = true;
        if (c == 3) forced[end] = false, forced[nb] = false;
    };
    for (int x = 1; x <= 3; ++x) {
        for (int y = 1; y <= 3; ++y) {
            std::fill(forced.begin(), forced.end(), std::nullopt);
            end_case(x, 0, 1);
            end_case(y, n - 1, n - 2);
            int s = constrained_opt_path(p, r, forced);
            m.entries[static_cast<std::size_t>((x - 1) * 3 + (y - 1))] = s == kInfinity ? kInfinity : s - base;
        }
    }
    return m;
}

std::string to_string(const CharacteristicMatrix& m) {
    std::ostringstream out;
    for (std::size_t q = 0; q < m.entries.size(); ++q) {
        if (q) out << ' ';
        if (m.entries[q] == kInfinity)
            out << "inf";
        else
            out << m.entries[q];
    }
    return out.str();
}

WeightedPath path_from_offsets(std::span<const int> inner_offsets, int r) {
    WeightedPath p;
    p.weights.push_back(r - 1);
    for (int o : inner_offsets) {
        if (o < 0 || o > 2) throw ContractError("inner offsets must lie in {0, 1, 2}");
        p.weights.push_back(r - o);
    }
    p.weights.push_back(r - 1);
    return p;
}

std::vector<std::vector<int>> offset_patterns(std::size_t path_length) {
    std::vector<std::vector<int>> out;
    if (path_length < 2) return out;
    std::vector<int> cur(path_length - 2, 0);
    while (true) {
        out.push_back(cur);
        std::size_t pos = cur.size();
        while (pos > 0 && cur[pos - 1] == 2) cur[--pos] = 0;
        if (pos == 0) break;
        ++cur[pos - 1];
    }
    return out;
}

ReplacementSurvey survey_replacements(int r, std::size_t long_length, std::size_t min_short, std::size_t max_short) {
    if (r < 2) throw UnsupportedParameter("replacement tables need r >= 2");
    if (min_short < 5 || max_short < min_short) throw ContractError("replacement lengths must be >= 5");
    ReplacementSurvey out{r, long_length, min_short, max_short, {}, {}, 0};

    struct Candidate {
        std::vector<int> pattern;
        int opt;
    };
    std::map<CharacteristicMatrix, Candidate> first_short;
    for (std::size_t len = min_short; len <= max_short; ++len) {
        for (const auto& pat : offset_patterns(len)) {
            auto path = path_from_offsets(pat, r);
            first_short.try_emplace(characteristic_matrix(path, r), Candidate{pat, opt_path(path, r)});
        }
    }

    std::map<CharacteristicMatrix, MatrixClass> classes;
    for (const auto& pat : offset_patterns(long_length)) {
        auto path = path_from_offsets(pat, r);
        ReplacementEntry e{pat, characteristic_matrix(path, r), opt_path(path, r), std::nullopt, 0};
        if (auto it = first_short.find(e.matrix); it != first_short.end()) {
            e.replacement = it->second.pattern;
            e.replacement_opt = it->second.opt;
        } else {
            ++out.unmatched;
        }
        auto& cls = classes[e.matrix];
        cls.matrix = e.matrix;
        cls.replacement = e.replacement;
        ++cls.members;
        out.entries.push_back(std::move(e));
    }
    for (auto& [_, cls] : classes) out.classes.push_back(std::move(cls));
    return out;
}

ReplacementTable build_replacement_table(int r) {
    auto survey = survey_replacements(r, 7, 6, 6);
    if (survey.unmatched)
        throw IntegrityError(std::to_string(survey.unmatched) + " of " + std::to_string(survey.entries.size()) +
                             " seven-vertex patterns have no six-vertex path with an equal characteristic matrix (" +
                             std::to_string(survey.distinct_matrices()) + " distinct matrices)");
    ReplacementTable table{r, {}, survey.distinct_matrices()};
    for (auto& e : survey.entries) table.by_pattern.emplace(e.pattern, std::move(e));
    return table;
}

PathRuleTable build_path_rule_table(int r) {
    PathRuleTable table{r, {}, {}};
    for (auto& e : survey_replacements(r, 7, 6, 6).entries)
        if (e.replacement) table.seven.emplace(e.pattern, std::move(e));
    auto ten = survey_replacements(r, 10, 5, 9);
    if (ten.unmatched)
        throw IntegrityError("some ten-vertex pattern has no shorter path with an equal characteristic matrix");
    for (auto& e : ten.entries) table.ten.emplace(e.pattern, std::move(e));
    return table;
}

}  // namespace bfvd
