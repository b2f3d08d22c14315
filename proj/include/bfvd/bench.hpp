#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bfvd {

/// One machine-readable record per run. Optional fields are left out of the
/// JSON form when they do not apply.
struct RunReport {
    std::string family;
    int index = 0;
    std::uint64_t seed = 0;
    std::string task;  // what was run on the instance (solver or kernel name)

    std::optional<int> n, m, i, j, k, r;
    std::optional<int> d, fen, fvs;
    std::optional<std::string> verdict;  // "yes", "no", or a kernel decision
    std::optional<double> wall_ms;
    std::optional<int> kernel_before, kernel_after;
    std::map<std::string, long long> rules;    // rule name -> applications
    std::map<std::string, long long> metrics;  // family-specific measurements
    std::optional<bool> oracle_agrees;
    bool timed_out = false;

    /// Single-line JSON object.
    std::string to_json() const;
};

struct BenchConfig {
    std::string family;  // fen-sweep | degen-sweep | fvn-sweep | gadget
    std::uint64_t seed = 1;
    int count = 30;       // instances per parameter cell
    int n = 0;            // 0 picks the family default
    int max_fen = 10;     // fen-sweep
    int r = 2;            // fen-sweep degree bound
    int timeout_ms = 10000;
    bool timing = true;   // false drops wall times, making reports byte-stable
};

/// Throws ContractError on an unknown family or invalid parameters.
void validate(const BenchConfig& cfg);

/// Runs every instance of the family in index order. Instance `index` draws
/// from Rng(seed * 0x9E3779B97F4A7C15 + index).
std::vector<RunReport> run_bench(const BenchConfig& cfg,
                                 const std::function<void(const RunReport&)>& sink = {});

/// Human-readable aggregate tables for the reports of one family.
std::string summarize(const BenchConfig& cfg, const std::vector<RunReport>& reports);

}  // namespace bfvd
