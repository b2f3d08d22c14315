#include "bfvd/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bfvd/bench.hpp"
#include "bfvd/bfvd_kernel.hpp"
#include "bfvd/biclique.hpp"
#include "bfvd/reductions.hpp"
#include "bfvd/selftest.hpp"
#include "bfvd/solvers.hpp"
#include "bfvd/structure.hpp"
#include "bfvd/wbdd_kernel.hpp"
#include "json.hpp"

namespace bfvd {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::string fvs_file;
    std::string algo = "auto";
    std::string mode = "bdd";
    std::string family;
    bool json = false;
    bool no_timing = false;
    std::optional<int> r, k, i, j;
    std::uint64_t seed = 1;
    int timeout_ms = 0;
    int count = 30;
    int n = 0;
    int max_fen = 10;
    int rounds = 100;
    int fvs_budget = 20;
};

BfvdInstance load_bfvd(const Options& o) {
    Instance any = read_instance_file(o.input);
    BfvdInstance inst;
    if (auto* b = std::get_if<BfvdInstance>(&any)) {
        inst = std::move(*b);
    } else {
        auto& w = std::get<WbddInstance>(any);
        for (const auto& [v, weight] : w.w)
            if (weight != 0) throw UsageError("weighted instances cannot be solved as bfvd (nonzero weight at " +
                                              std::to_string(v) + ")");
        inst = bdd_as_bfvd(BddInstance{std::move(w.g), o.r.value_or(w.r), w.k});
    }
    if (o.i) inst.i = *o.i;
    if (o.j) inst.j = *o.j;
    if (o.k) inst.k = *o.k;
    if (inst.i < 1 || inst.i > inst.j) throw UsageError("need 1 <= i <= j");
    if (inst.k < 0) throw UsageError("k must be non-negative");
    return inst;
}

BddInstance load_bdd(const Options& o) {
    Instance any = read_instance_file(o.input);
    BddInstance inst;
    if (auto* w = std::get_if<WbddInstance>(&any)) {
        for (const auto& [v, weight] : w->w)
            if (weight != 0) throw UsageError("weights must be absent or zero (vertex " + std::to_string(v) + ")");
        inst = BddInstance{std::move(w->g), w->r, w->k};
    } else {
        auto& b = std::get<BfvdInstance>(any);
        if (!o.r && b.i != 1) throw UsageError("bfvd input with i > 1 needs --r");
        inst = BddInstance{std::move(b.g), b.j - 1, b.k};
    }
    if (o.r) inst.r = *o.r;
    if (o.k) inst.k = *o.k;
    if (inst.r < 0 || inst.k < 0) throw UsageError("r and k must be non-negative");
    return inst;
}

std::string join(const VertexSet& s) {
    std::string out;
    for (Vertex v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
    return out;
}

std::string rule_summary(const ReductionTrace& trace) {
    std::map<std::string, int> counts;
    for (const auto& e : trace.entries) ++counts[to_string(e.rule)];
    std::string out;
    for (const auto& [name, c] : counts) out += (out.empty() ? "" : " ") + name + "=" + std::to_string(c);
    return out.empty() ? "none" : out;
}

Json rule_counts(const ReductionTrace& trace) {
    Json o = Json::object();
    for (const auto& e : trace.entries) o[to_string(e.rule)] = o.value(to_string(e.rule), 0) + 1;
    return o;
}

int cmd_solve(const Options& o, std::ostream& out) {
    BfvdInstance inst = load_bfvd(o);
    auto strategy = parse_strategy(o.algo);
    if (!strategy) throw UsageError("unknown --algo '" + o.algo + "'");
    SolveOptions so{.strategy = *strategy};
    if (!o.fvs_file.empty()) {
        std::ifstream in(o.fvs_file);
        if (!in) throw UsageError("cannot open '" + o.fvs_file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        so.fvs = parse_vertex_list(buf.str());
        for (Vertex v : *so.fvs)
            if (!inst.g.has_vertex(v)) throw UsageError("--fvs-file names unknown vertex " + std::to_string(v));
        if (!is_feedback_vertex_set(inst.g, *so.fvs)) throw UsageError("--fvs-file is not a feedback vertex set");
    }
    if (o.timeout_ms > 0) so.deadline = Deadline(std::chrono::milliseconds(o.timeout_ms));

    Json rec;
    rec["n"] = inst.g.num_vertices();
    rec["m"] = inst.g.num_edges();
    rec["i"] = inst.i;
    rec["j"] = inst.j;
    rec["k"] = inst.k;
    auto start = Clock::now();
    auto ms = [&] { return std::chrono::duration<double, std::milli>(Clock::now() - start).count(); };
    try {
        Verdict v = solve(inst, so);
        verify_verdict(inst, v);
        if (o.json) {
            rec["answer"] = v.yes ? "yes" : "no";
            if (v.yes) rec["witness"] = v.witness;
            rec["strategy"] = v.strategy;
            rec["stats"] = {{"nodes", v.stats.nodes}, {"rule_applications", v.stats.rule_applications}};
            rec["wall_ms"] = ms();
            out << rec.dump() << '\n';
        } else {
            out << (v.yes ? "YES" : "NO") << '\n';
            if (v.yes) out << "witness: " << join(v.witness) << '\n';
            out << "# strategy " << v.strategy << ", " << v.stats.nodes << " nodes, " << ms() << " ms\n";
        }
        return kExitOk;
    } catch (const TimeoutError&) {
        if (o.json) {
            rec["answer"] = "timeout";
            rec["wall_ms"] = ms();
            out << rec.dump() << '\n';
        } else {
            out << "TIMEOUT\n# n " << inst.g.num_vertices() << ", m " << inst.g.num_edges() << ", stopped after "
                << ms() << " ms\n";
        }
        return kExitTimeout;
    }
}

int cmd_kernelize(const Options& o, std::ostream& out, std::ostream& err) {
    Json rec;
    std::string text;
    std::ostringstream note;
    if (o.mode == "bdd") {
        BddInstance inst = load_bdd(o);
        BddKernel ker = kernelize_bdd(inst.g, inst.r, inst.k);
        // A decided no has negative k, which no file can carry.
        BddInstance shown = ker.instance;
        if (ker.decided == Decision::no) shown = BddInstance{Graph(2), 0, 0}, shown.g.add_edge(1, 2);
        text = write_instance(shown);
        rec["mode"] = "bdd";
        rec["n_before"] = inst.g.num_vertices();
        rec["n_after"] = ker.instance.g.num_vertices();
        rec["weighted_n"] = ker.weighted.g.num_vertices();
        rec["r_after"] = ker.instance.r;
        rec["k_after"] = ker.instance.k;
        rec["decision"] = to_string(ker.decided);
        rec["rules"] = rule_counts(ker.trace);
        note << "# bdd kernel: n " << inst.g.num_vertices() << " -> " << ker.instance.g.num_vertices() << " (weighted "
             << ker.weighted.g.num_vertices() << "), r " << inst.r << " -> " << ker.instance.r << ", k " << inst.k
             << " -> " << ker.instance.k << ", decision " << to_string(ker.decided) << "\n# rules: "
             << rule_summary(ker.trace) << '\n';
    } else if (o.mode == "bfvd") {
        BfvdInstance inst = load_bfvd(o);
        auto [ker, trace] = kernelize_bfvd(inst);
        text = write_instance(ker);
        rec["mode"] = "bfvd";
        rec["n_before"] = inst.g.num_vertices();
        rec["n_after"] = ker.g.num_vertices();
        rec["rules"] = rule_counts(trace);
        note << "# bfvd kernel: n " << inst.g.num_vertices() << " -> " << ker.g.num_vertices() << "\n# rules: "
             << rule_summary(trace) << '\n';
    } else {
        throw UsageError("--mode must be bdd or bfvd");
    }
    if (o.json) {
        rec["instance"] = text;
        out << rec.dump() << '\n';
    } else {
        out << text;
        err << note.str();
    }
    return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    BfvdInstance inst = load_bfvd(o);
    SideBackend backend = SideBackend::reference;
    if (o.algo == "maximal") backend = SideBackend::maximal_bicliques;
    else if (o.algo != "auto" && o.algo != "reference") throw UsageError("enumerate --algo is reference or maximal");
    auto sides = enumerate_smaller_sides(inst.g, inst.i, inst.j, backend);
    for (const auto& [side, common] : sides.sides) {
        if (o.json)
            out << Json{{"side", side}, {"common", common.size()}}.dump() << '\n';
        else
            out << join(side) << " | " << common.size() << '\n';
    }
    if (!o.json) out << "# sides " << sides.size() << ", ss " << sides.side_union().size() << '\n';
    return kExitOk;
}

int cmd_stats(const Options& o, std::ostream& out) {
    Instance any = read_instance_file(o.input);
    const Graph& g = std::visit([](const auto& inst) -> const Graph& { return inst.g; }, any);
    auto fvs = minimum_fvs(g, o.fvs_budget);
    Json rec;
    rec["n"] = g.num_vertices();
    rec["m"] = g.num_edges();
    rec["d"] = degeneracy(g).d;
    rec["fen"] = feedback_edge_data(g).fen;
    if (fvs.found()) rec["fvs"] = fvs.fvs.size();
    rec["components"] = count_components(g);
    rec["forest"] = is_forest(g);
    if (o.json) {
        out << rec.dump() << '\n';
        return kExitOk;
    }
    out << "n " << g.num_vertices() << "\nm " << g.num_edges() << "\nd=" << rec["d"].get<int>()
        << "\nfen=" << rec["fen"].get<int>() << "\nfvs size ";
    if (fvs.found()) out << fvs.fvs.size() << " (" << join(fvs.fvs) << ")\n";
    else out << "> " << o.fvs_budget << '\n';
    out << "components " << count_components(g) << "\nforest " << (is_forest(g) ? "yes" : "no") << '\n';
    return kExitOk;
}

std::string offsets_text(const std::vector<int>& p) {
    std::string out;
    for (int x : p) out += (out.empty() ? "" : " ") + std::to_string(x);
    return out;
}

int cmd_charm_table(const Options& o, std::ostream& out, std::ostream& err) {
    int r = o.r.value_or(2);
    auto survey = survey_replacements(r, 7, 6, 6);
    out << "# characteristic matrices of 7-vertex paths, r = " << r << '\n'
        << "# line: inner offsets (weight = r - offset) | M11 M12 M13 M21 M22 M23 M31 M32 M33 | "
           "6-vertex replacement offsets or none\n";
    for (const auto& e : survey.entries) {
        out << offsets_text(e.pattern) << " | " << to_string(e.matrix) << " | "
            << (e.replacement ? offsets_text(*e.replacement) : "none") << '\n';
    }
    int idx = 0;
    for (const auto& c : survey.classes) {
        out << "# class " << ++idx << ": " << to_string(c.matrix) << " members " << c.members << " replacement "
            << (c.replacement ? offsets_text(*c.replacement) : "none") << '\n';
    }
    out << "distinct-matrices: " << survey.distinct_matrices() << '\n'
        << "unmatched: " << survey.unmatched << '\n';
    try {
        build_replacement_table(r);
    } catch (const IntegrityError& e) {
        err << "charm-table: " << e.what() << '\n';
        return kExitContract;
    }
    return kExitOk;
}

int cmd_reduce_bdd(const Options& o, std::ostream& out) {
    if (!o.i) throw UsageError("reduce-bdd needs --i");
    BddInstance inst = load_bdd(o);
    out << write_instance(hardness_gadget(inst, *o.i));
    return kExitOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
    BenchConfig cfg;
    cfg.family = o.family;
    cfg.seed = o.seed;
    cfg.count = o.count;
    cfg.n = o.n;
    cfg.max_fen = o.max_fen;
    cfg.r = o.r.value_or(2);
    cfg.timeout_ms = o.timeout_ms > 0 ? o.timeout_ms : 10000;
    cfg.timing = !o.no_timing;
    try {
        validate(cfg);
    } catch (const ContractError& e) {
        throw UsageError(e.what());
    }
    auto reports = run_bench(cfg, [&](const RunReport& rep) {
        if (o.json) out << rep.to_json() << '\n';
    });
    if (!o.json) out << summarize(cfg, reports);
    for (const auto& rep : reports)
        if (rep.timed_out) return kExitTimeout;
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Biclique-free and bounded-degree vertex deletion toolkit", "bfvd"};
    app.require_subcommand(1);
    Options o;

    auto input = [&](CLI::App* sub) { sub->add_option("--input", o.input, "instance file")->required(); };
    auto params = [&](CLI::App* sub) {
        sub->add_option("--i", o.i, "override i");
        sub->add_option("--j", o.j, "override j");
        sub->add_option("--k", o.k, "override k");
        sub->add_option("--r", o.r, "degree bound (bdd inputs)");
    };
    auto json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "one JSON record per line"); };

    auto* solve_cmd = app.add_subcommand("solve", "decide an instance");
    input(solve_cmd);
    params(solve_cmd);
    json(solve_cmd);
    solve_cmd->add_option("--algo", o.algo, "auto, oracle, vc, branch, degen, fvn");
    solve_cmd->add_option("--fvs-file", o.fvs_file, "feedback vertex set for fvn");
    solve_cmd->add_option("--timeout-ms", o.timeout_ms, "time limit");

    auto* kern_cmd = app.add_subcommand("kernelize", "shrink an instance");
    input(kern_cmd);
    params(kern_cmd);
    json(kern_cmd);
    kern_cmd->add_option("--mode", o.mode, "bdd or bfvd");

    auto* enum_cmd = app.add_subcommand("enumerate", "list smaller sides of all K_{i,j}");
    input(enum_cmd);
    params(enum_cmd);
    json(enum_cmd);
    enum_cmd->add_option("--algo", o.algo, "reference or maximal");

    auto* stats_cmd = app.add_subcommand("stats", "structural parameters");
    input(stats_cmd);
    json(stats_cmd);
    stats_cmd->add_option("--fvs-budget", o.fvs_budget, "largest feedback vertex set searched");

    auto* charm_cmd = app.add_subcommand("charm-table", "characteristic matrix table");
    charm_cmd->add_option("--r", o.r, "degree bound (>= 2)");

    auto* reduce_cmd = app.add_subcommand("reduce-bdd", "build the biclique gadget instance");
    input(reduce_cmd);
    params(reduce_cmd);

    auto* bench_cmd = app.add_subcommand("bench", "seeded benchmark families");
    bench_cmd->add_option("family", o.family, "fen-sweep, degen-sweep, fvn-sweep, gadget")->required();
    bench_cmd->add_option("--seed", o.seed, "generator seed");
    bench_cmd->add_option("--count", o.count, "instances per cell");
    bench_cmd->add_option("--n", o.n, "instance size");
    bench_cmd->add_option("--max-fen", o.max_fen, "fen-sweep upper end");
    bench_cmd->add_option("--r", o.r, "fen-sweep degree bound");
    bench_cmd->add_option("--timeout-ms", o.timeout_ms, "per-instance time limit");
    bench_cmd->add_flag("--no-timing", o.no_timing, "omit wall times");
    json(bench_cmd);

    auto* self_cmd = app.add_subcommand("selftest", "randomized property checks");
    self_cmd->add_option("--seed", o.seed, "seed");
    self_cmd->add_option("--rounds", o.rounds, "cases per suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(o, out);
        if (kern_cmd->parsed()) return cmd_kernelize(o, out, err);
        if (enum_cmd->parsed()) return cmd_enumerate(o, out);
        if (stats_cmd->parsed()) return cmd_stats(o, out);
        if (charm_cmd->parsed()) return cmd_charm_table(o, out, err);
        if (reduce_cmd->parsed()) return cmd_reduce_bdd(o, out);
        if (bench_cmd->parsed()) return cmd_bench(o, out);
        if (self_cmd->parsed()) return run_selftest(out, o.seed, o.rounds) == 0 ? kExitOk : kExitContract;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const TimeoutError& e) {
        err << "error: " << e.what() << '\n';
        return kExitTimeout;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitContract;
    }
    return kExitUsage;
}

}  // namespace bfvd
