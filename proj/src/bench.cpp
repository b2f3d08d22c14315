#include "bfvd/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "bfvd/bfvd_kernel.hpp"
#include "bfvd/generators.hpp"
#include "bfvd/reductions.hpp"
#include "bfvd/solvers.hpp"
#include "bfvd/structure.hpp"
#include "bfvd/wbdd_kernel.hpp"
#include "json.hpp"

namespace bfvd {

std::string RunReport::to_json() const {
    nlohmann::ordered_json o;
    o["family"] = family;
    o["index"] = index;
    o["seed"] = seed;
    o["task"] = task;
    auto put = [&](const char* key, const auto& field) {
        if (field) o[key] = *field;
    };
    put("n", n);
    put("m", m);
    put("i", i);
    put("j", j);
    put("k", k);
    put("r", r);
    put("d", d);
    put("fen", fen);
    put("fvs", fvs);
    put("verdict", verdict);
    put("wall_ms", wall_ms);
    put("kernel_before", kernel_before);
    put("kernel_after", kernel_after);
    if (!rules.empty()) o["rules"] = rules;
    if (!metrics.empty()) o["metrics"] = metrics;
    put("oracle_agrees", oracle_agrees);
    if (timed_out) o["timed_out"] = true;
    return o.dump();
}

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<std::string> kFamilies = {"fen-sweep", "degen-sweep", "fvn-sweep", "gadget"};

int default_n(const BenchConfig& cfg) {
    if (cfg.n > 0) return cfg.n;
    if (cfg.family == "fen-sweep") return 200;
    if (cfg.family == "gadget") return 6;
    return 30;
}

Rng instance_rng(const BenchConfig& cfg, int index) {
    return Rng(cfg.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(index));
}

void record_rules(RunReport& rep, const ReductionTrace& trace) {
    for (const auto& e : trace.entries) ++rep.rules[to_string(e.rule)];
}

void describe(RunReport& rep, const Graph& g) {
    rep.n = static_cast<int>(g.num_vertices());
    rep.m = static_cast<int>(g.num_edges());
}

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// (d, k) cells with d * k^2 <= 12 and (f, k) cells with f * k <= 12.
std::vector<std::pair<int, int>> degen_cells() {
    std::vector<std::pair<int, int>> out;
    for (int d = 1; d <= 12; ++d)
        for (int k = 1; d * k * k <= 12; ++k) out.push_back({d, k});
    return out;
}

std::vector<std::pair<int, int>> fvn_cells() {
    std::vector<std::pair<int, int>> out;
    for (int f = 1; f <= 12; ++f)
        for (int k = 1; f * k <= 12; ++k) out.push_back({f, k});
    return out;
}

void fen_sweep(const BenchConfig& cfg, const std::function<void(RunReport)>& emit) {
    const int n = default_n(cfg);
    int index = 0;
    for (int fen = 1; fen <= cfg.max_fen; ++fen) {
        for (int s = 0; s < cfg.count; ++s, ++index) {
            Rng rng = instance_rng(cfg, index);
            Graph g = tree_plus_edges(n, fen, rng);
            // k = n never runs out, so the fixpoint reflects the rules alone.
            {
                RunReport rep{cfg.family, index, cfg.seed, "bdd-kernel"};
                describe(rep, g);
                rep.r = cfg.r;
                rep.k = n;
                rep.fen = fen;
                auto start = Clock::now();
                BddKernel ker = kernelize_bdd(g, cfg.r, n);
                if (cfg.timing) rep.wall_ms = elapsed_ms(start);
                rep.verdict = to_string(ker.decided);
                rep.kernel_before = n;
                rep.kernel_after = static_cast<int>(ker.weighted.g.num_vertices());
                record_rules(rep, ker.trace);
                auto shape = degree_two_structure(ker.weighted.g);
                rep.metrics["expanded_vertices"] = static_cast<long long>(ker.instance.g.num_vertices());
                rep.metrics["high_degree"] = shape.high_degree_vertices;
                rep.metrics["degree_two_runs"] = shape.maximal_paths_and_cycles;
                rep.metrics["longest_run"] = shape.longest_path_or_cycle;
                rep.metrics["min_degree"] = shape.min_degree;
                rep.metrics["kernel_fen"] = feedback_edge_data(ker.weighted.g).fen;
                emit(std::move(rep));
            }
            {
                RunReport rep{cfg.family, index, cfg.seed, "bfvd-kernel"};
                describe(rep, g);
                rep.i = 2;
                rep.j = 3;
                rep.k = n;
                rep.fen = fen;
                auto start = Clock::now();
                auto [ker, trace] = kernelize_bfvd(BfvdInstance{g, 2, 3, n});
                if (cfg.timing) rep.wall_ms = elapsed_ms(start);
                rep.kernel_before = n;
                rep.kernel_after = static_cast<int>(ker.g.num_vertices());
                record_rules(rep, trace);
                auto shape = degree_two_structure(ker.g);
                rep.metrics["high_degree"] = shape.high_degree_vertices;
                rep.metrics["degree_two_runs"] = shape.maximal_paths_and_cycles;
                rep.metrics["longest_run"] = shape.longest_path_or_cycle;
                rep.metrics["middle_of_five_left"] = find_middle_of_five(ker.g) ? 1 : 0;
                emit(std::move(rep));
            }
        }
    }
}

// Shared by the two solver sweeps: run, time, and cross-check with the oracle.
void solve_and_check(RunReport& rep, const BfvdInstance& inst, const BenchConfig& cfg,
                     const std::function<Verdict(const Deadline&)>& run) {
    describe(rep, inst.g);
    rep.i = inst.i;
    rep.j = inst.j;
    rep.k = inst.k;
    auto start = Clock::now();
    try {
        Verdict v = run(Deadline(std::chrono::milliseconds(cfg.timeout_ms)));
        if (cfg.timing) rep.wall_ms = elapsed_ms(start);
        rep.verdict = v.yes ? "yes" : "no";
        rep.metrics["nodes"] = static_cast<long long>(v.stats.nodes);
        Verdict o = solve_oracle(inst, {.allow_large = true});
        rep.oracle_agrees = o.yes == v.yes;
    } catch (const TimeoutError&) {
        if (cfg.timing) rep.wall_ms = elapsed_ms(start);
        rep.timed_out = true;
    }
}

void degen_sweep(const BenchConfig& cfg, const std::function<void(RunReport)>& emit) {
    const int n = default_n(cfg);
    int index = 0;
    for (auto [d, k] : degen_cells()) {
        for (int s = 0; s < cfg.count; ++s, ++index) {
            Rng rng = instance_rng(cfg, index);
            BfvdInstance inst{random_degenerate(n, d, rng), 1, 3, k};
            RunReport rep{cfg.family, index, cfg.seed, "degen"};
            rep.d = degeneracy(inst.g).d;
            solve_and_check(rep, inst, cfg, [&](const Deadline& dl) { return solve_degenerate(inst, dl); });
            emit(std::move(rep));
        }
    }
}

void fvn_sweep(const BenchConfig& cfg, const std::function<void(RunReport)>& emit) {
    const int n = default_n(cfg);
    int index = 0;
    for (auto [f, k] : fvn_cells()) {
        for (int s = 0; s < cfg.count; ++s, ++index) {
            Rng rng = instance_rng(cfg, index);
            BfvdInstance inst{forest_plus_hubs(n, f, 0.3, rng), 2, 3, k};
            VertexSet hubs;
            for (int h = n - f + 1; h <= n; ++h) hubs.push_back(h);
            RunReport rep{cfg.family, index, cfg.seed, "fvn"};
            rep.fvs = f;
            solve_and_check(rep, inst, cfg, [&](const Deadline& dl) { return solve_fvn(inst, hubs, dl); });
            emit(std::move(rep));
        }
    }
}

void gadget_family(const BenchConfig& cfg, const std::function<void(RunReport)>& emit) {
    const int max_n = default_n(cfg);
    for (int index = 0; index < cfg.count; ++index) {
        Rng rng = instance_rng(cfg, index);
        int i = rng.between(2, 3);
        int n = rng.between(i + 1, std::max(i + 1, max_n));
        BddInstance bdd{random_graph(n, 0.5, rng), rng.between(0, 2), rng.between(0, 3)};
        RunReport rep{cfg.family, index, cfg.seed, "gadget"};
        auto start = Clock::now();
        BfvdInstance g = hardness_gadget(bdd, i);
        describe(rep, g.g);
        rep.i = g.i;
        rep.j = g.j;
        rep.k = g.k;
        rep.r = bdd.r;
        rep.metrics["source_n"] = n;
        rep.metrics["source_m"] = static_cast<long long>(bdd.g.num_edges());
        bool expect = solve_bdd_oracle(bdd).yes;
        bool got = solve_oracle(g, {.allow_large = true}).yes;
        if (cfg.timing) rep.wall_ms = elapsed_ms(start);
        rep.verdict = got ? "yes" : "no";
        rep.oracle_agrees = expect == got;
        emit(std::move(rep));
    }
}

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

std::string summarize_fen(const std::vector<RunReport>& reports) {
    struct Row {
        long long wbdd = 0, bdd = 0, bfvd = 0, high = 0, runs = 0, longest = 0;
    };
    std::map<int, Row> rows;
    for (const auto& rep : reports) {
        Row& row = rows[*rep.fen];
        if (rep.task == "bdd-kernel") {
            row.wbdd = std::max<long long>(row.wbdd, *rep.kernel_after);
            row.bdd = std::max(row.bdd, rep.metrics.at("expanded_vertices"));
            row.high = std::max(row.high, rep.metrics.at("high_degree"));
            row.runs = std::max(row.runs, rep.metrics.at("degree_two_runs"));
            row.longest = std::max(row.longest, rep.metrics.at("longest_run"));
        } else {
            row.bfvd = std::max<long long>(row.bfvd, *rep.kernel_after);
        }
    }
    std::ostringstream out;
    out << "fen  max-wbdd  max-bdd  max-bfvd  max-deg3  max-runs  longest-run\n";
    double c1 = 0, c2 = 0, cb = 0;
    for (const auto& [fen, row] : rows) {
        char line[128];
        std::snprintf(line, sizeof line, "%3d  %8lld  %7lld  %8lld  %8lld  %8lld  %11lld\n", fen, row.wbdd, row.bdd,
                      row.bfvd, row.high, row.runs, row.longest);
        out << line;
        c1 = std::max(c1, static_cast<double>(row.wbdd) / fen);
        cb = std::max(cb, static_cast<double>(row.bfvd) / fen);
        c2 = std::max(c2, static_cast<double>(row.bdd) / (fen * fen));
    }
    out << "fitted: wbdd <= " << fmt("%.2f", c1) << "*fen, bfvd <= " << fmt("%.2f", cb)
        << "*fen, expanded bdd <= " << fmt("%.2f", c2) << "*fen^2\n";
    return out.str();
}

std::string summarize_solver(const std::vector<RunReport>& reports, const char* param) {
    struct Row {
        int runs = 0, timeouts = 0, disagreements = 0;
        double max_ms = 0, total_ms = 0;
    };
    std::map<std::pair<int, int>, Row> rows;
    for (const auto& rep : reports) {
        int p = rep.d ? *rep.d : *rep.fvs;
        Row& row = rows[{p, *rep.k}];
        ++row.runs;
        if (rep.timed_out) ++row.timeouts;
        if (rep.oracle_agrees && !*rep.oracle_agrees) ++row.disagreements;
        if (rep.wall_ms) {
            row.max_ms = std::max(row.max_ms, *rep.wall_ms);
            row.total_ms += *rep.wall_ms;
        }
    }
    std::ostringstream out;
    out << param << "  k  runs  mean-ms  max-ms  timeouts  disagreements\n";
    for (const auto& [key, row] : rows) {
        char line[128];
        std::snprintf(line, sizeof line, "%-4d %2d  %4d  %7.2f  %6.2f  %8d  %13d\n", key.first, key.second, row.runs,
                      row.runs ? row.total_ms / row.runs : 0.0, row.max_ms, row.timeouts, row.disagreements);
        out << line;
    }
    return out.str();
}

}  // namespace

void validate(const BenchConfig& cfg) {
    if (std::find(kFamilies.begin(), kFamilies.end(), cfg.family) == kFamilies.end())
        throw ContractError("unknown bench family '" + cfg.family + "'");
    if (cfg.count < 1) throw ContractError("bench count must be positive");
    if (cfg.n < 0) throw ContractError("bench n must be non-negative");
    if (cfg.timeout_ms < 1) throw ContractError("timeout must be positive");
    if (cfg.family == "fen-sweep") {
        if (cfg.max_fen < 1) throw ContractError("max fen must be positive");
        if (cfg.r < 0) throw ContractError("r must be non-negative");
        long long n = default_n(cfg);
        if (cfg.max_fen > n * (n - 1) / 2 - (n - 1)) throw ContractError("fen too large for n");
    }
    if (cfg.family == "fvn-sweep" && cfg.n > 0 && cfg.n < 13) throw ContractError("fvn-sweep needs n >= 13");
    if (cfg.family == "gadget" && (cfg.n > 0 && (cfg.n < 4 || cfg.n > 7)))
        throw ContractError("gadget family needs 4 <= n <= 7");
}

std::vector<RunReport> run_bench(const BenchConfig& cfg, const std::function<void(const RunReport&)>& sink) {
    validate(cfg);
    std::vector<RunReport> out;
    auto emit = [&](RunReport rep) {
        if (sink) sink(rep);
        out.push_back(std::move(rep));
    };
    if (cfg.family == "fen-sweep") fen_sweep(cfg, emit);
    if (cfg.family == "degen-sweep") degen_sweep(cfg, emit);
    if (cfg.family == "fvn-sweep") fvn_sweep(cfg, emit);
    if (cfg.family == "gadget") gadget_family(cfg, emit);
    return out;
}

std::string summarize(const BenchConfig& cfg, const std::vector<RunReport>& reports) {
    if (cfg.family == "fen-sweep") return summarize_fen(reports);
    if (cfg.family == "degen-sweep") return summarize_solver(reports, "d   ");
    if (cfg.family == "fvn-sweep") return summarize_solver(reports, "fvn ");
    int agree = 0;
    for (const auto& rep : reports) agree += rep.oracle_agrees.value_or(false);
    return "gadget instances: " + std::to_string(reports.size()) + ", oracle agreement: " + std::to_string(agree) +
           "/" + std::to_string(reports.size()) + "\n";
}

}  // namespace bfvd
