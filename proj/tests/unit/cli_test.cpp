#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bfvd/bench.hpp"
#include "bfvd/cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace bfvd;

namespace {

struct Run {
    int status;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "bfvd");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

// Instance file in the working directory, removed at scope exit.
struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& text) : path("cli_test_" + name) {
        std::ofstream(path) << text;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

const char* kC4 = "p bfvd 4 4\ne 1 2\ne 1 4\ne 2 3\ne 3 4\nparam 1 2 2\n";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("solve with the oracle") {
    TempFile f("c4.txt", kC4);
    Run r = run({"solve", "--algo", "oracle", "--input", f.path});
    CHECK(r.status == 0);
    auto out = lines(r.out);
    REQUIRE(out.size() >= 2);
    CHECK(out[0] == "YES");
    CHECK(out[1] == "witness: 1 2");

    Run no = run({"solve", "--input", f.path, "--k", "1"});
    CHECK(no.status == 0);
    CHECK(lines(no.out)[0] == "NO");

    Run js = run({"solve", "--input", f.path, "--algo", "branch", "--json"});
    CHECK(js.status == 0);
    auto rec = nlohmann::json::parse(js.out);
    CHECK(rec["answer"] == "yes");
    CHECK(rec["witness"].size() == 2);
    CHECK(rec.contains("stats"));
}

TEST_CASE("solve with a supplied feedback vertex set") {
    TempFile f("k23.txt", "p bfvd 5 6\ne 1 3\ne 1 4\ne 1 5\ne 2 3\ne 2 4\ne 2 5\nparam 2 3 1\n");
    TempFile d("fvs.txt", "1\n");
    Run r = run({"solve", "--algo", "fvn", "--fvs-file", d.path, "--input", f.path});
    CHECK(r.status == 0);
    CHECK(lines(r.out)[0] == "YES");
    TempFile bad("bad_fvs.txt", "3\n");
    CHECK(run({"solve", "--algo", "fvn", "--fvs-file", bad.path, "--input", f.path}).status == 2);
    CHECK(run({"solve", "--algo", "fvn", "--input", f.path, "--i", "1"}).status == 3);
}

TEST_CASE("stats on a tree") {
    TempFile f("tree.txt", "p bfvd 5 4\ne 1 2\ne 1 3\ne 3 4\ne 3 5\nparam 2 2 0\n");
    Run r = run({"stats", "--input", f.path});
    CHECK(r.status == 0);
    CHECK(r.out.find("d=1") != std::string::npos);
    CHECK(r.out.find("fen=0") != std::string::npos);
    CHECK(r.out.find("fvs size 0") != std::string::npos);
    auto rec = nlohmann::json::parse(run({"stats", "--input", f.path, "--json"}).out);
    CHECK(rec["fvs"] == 0);
}

TEST_CASE("enumerate smaller sides") {
    TempFile f("c4e.txt", kC4);
    Run r = run({"enumerate", "--input", f.path, "--i", "2", "--j", "2"});
    CHECK(r.status == 0);
    auto out = lines(r.out);
    REQUIRE(out.size() == 3);
    CHECK(out[0] == "1 3 | 2");
    CHECK(out[1] == "2 4 | 2");
    Run m = run({"enumerate", "--input", f.path, "--i", "2", "--j", "2", "--algo", "maximal"});
    CHECK(m.out == r.out);
}

TEST_CASE("charm table output") {
    Run r = run({"charm-table", "--r", "2"});
    int data = 0;
    std::string summary;
    for (const auto& line : lines(r.out)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("distinct-matrices:", 0) == 0) summary = line;
        else if (line.find('|') != std::string::npos) ++data;
    }
    CHECK(data == 243);
    CHECK_FALSE(summary.empty());
    // Status 3 exactly when some seven-vertex pattern lacks a six-vertex match.
    bool unmatched = r.out.find("unmatched: 0\n") == std::string::npos;
    CHECK(r.status == (unmatched ? 3 : 0));
    CHECK(run({"charm-table", "--r", "1"}).status == 3);
}

TEST_CASE("kernelize round-trips an irreducible instance") {
    const char* k23 = "p bfvd 5 6\ne 1 3\ne 1 4\ne 1 5\ne 2 3\ne 2 4\ne 2 5\nparam 2 3 1\n";
    TempFile f("k23k.txt", k23);
    Run r = run({"kernelize", "--mode", "bfvd", "--input", f.path});
    CHECK(r.status == 0);
    CHECK(r.out == k23);
    CHECK(r.err.find("bfvd kernel") != std::string::npos);

    const char* theta = "p wbdd 2 1 1 0\ne 1 2\n";
    TempFile w("k2.txt", theta);
    Run b = run({"kernelize", "--mode", "bdd", "--input", w.path});
    CHECK(b.status == 0);
    CHECK(b.out == "p wbdd 0 0 1 0\n");
}

TEST_CASE("kernelize bdd decisions") {
    TempFile f("star.txt", "p wbdd 6 5 2 0\ne 1 2\ne 1 3\ne 1 4\ne 1 5\ne 1 6\n");
    Run r = run({"kernelize", "--mode", "bdd", "--input", f.path});
    CHECK(r.status == 0);
    CHECK(r.out == "p wbdd 2 1 0 0\ne 1 2\n");
    Run js = run({"kernelize", "--mode", "bdd", "--input", f.path, "--json"});
    CHECK(nlohmann::json::parse(js.out)["decision"] == "no");
    CHECK(run({"kernelize", "--mode", "bdd", "--input", f.path, "--k", "1"}).out == "p wbdd 0 0 2 0\n");
    CHECK(run({"kernelize", "--mode", "xyz", "--input", f.path}).status == 2);
}

TEST_CASE("reduce-bdd") {
    TempFile f("tri.txt", "p wbdd 3 3 1 1\ne 1 2\ne 1 3\ne 2 3\n");
    Run r = run({"reduce-bdd", "--i", "2", "--input", f.path});
    CHECK(r.status == 0);
    CHECK(r.out.rfind("p bfvd 15 ", 0) == 0);
    CHECK(r.out.find("param 2 5 1\n") != std::string::npos);
    CHECK(run({"reduce-bdd", "--i", "3", "--input", f.path}).status == 3);
    TempFile w("weighted.txt", "p wbdd 3 3 1 1\ne 1 2\ne 1 3\ne 2 3\nw 1 1\n");
    CHECK(run({"reduce-bdd", "--i", "2", "--input", w.path}).status == 2);
}

TEST_CASE("usage and input errors") {
    CHECK(run({}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"solve", "--input", "/nonexistent"}).status == 2);
    CHECK(run({"solve"}).status == 2);
    TempFile f("c4u.txt", kC4);
    CHECK(run({"solve", "--input", f.path, "--bogus"}).status == 2);
    CHECK(run({"solve", "--input", f.path, "--algo", "magic"}).status == 2);
    TempFile bad("bad.txt", "p bfvd 2 1\ne 1 1\nparam 1 1 0\n");
    Run r = run({"solve", "--input", bad.path});
    CHECK(r.status == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
    CHECK(run({"--help"}).status == 0);
}

TEST_CASE("timeout yields status 4 with a partial report") {
    std::string text = "p bfvd 40 ";
    std::string edges;
    int m = 0;
    for (int u = 1; u <= 40; ++u)
        for (int v = u + 1; v <= 40; ++v)
            if ((u * 7 + v * 13) % 3 == 0) edges += "e " + std::to_string(u) + " " + std::to_string(v) + "\n", ++m;
    text += std::to_string(m) + "\n" + edges + "param 1 2 30\n";
    TempFile f("big.txt", text);
    Run r = run({"solve", "--algo", "branch", "--timeout-ms", "1", "--input", f.path});
    CHECK(r.status == 4);
    CHECK(r.out.rfind("TIMEOUT", 0) == 0);
}

TEST_CASE("bench is deterministic per seed") {
    std::vector<std::string> args{"bench", "fen-sweep", "--seed", "7", "--count", "2", "--max-fen", "3",
                                  "--n", "60", "--no-timing", "--json"};
    Run a = run(args);
    Run b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(lines(a.out).size() == 12);
    args[2 + 1] = "8";
    CHECK(run(args).out != a.out);

    Run table = run({"bench", "fen-sweep", "--count", "2", "--max-fen", "2", "--n", "40"});
    CHECK(table.out.find("fitted:") != std::string::npos);
    CHECK(run({"bench", "nope"}).status == 2);
    CHECK(run({"bench", "gadget", "--n", "2"}).status == 2);
}

TEST_CASE("solver sweeps report zero disagreements") {
    BenchConfig cfg{.family = "degen-sweep", .seed = 3, .count = 2, .n = 16, .timing = false};
    for (const auto& rep : run_bench(cfg)) {
        CHECK_FALSE(rep.timed_out);
        CHECK(rep.oracle_agrees == true);
    }
    cfg.family = "fvn-sweep";
    for (const auto& rep : run_bench(cfg)) CHECK(rep.oracle_agrees == true);
    cfg.family = "gadget";
    cfg.n = 5;
    cfg.count = 10;
    for (const auto& rep : run_bench(cfg)) CHECK(rep.oracle_agrees == true);
}

TEST_CASE("run reports omit fields that do not apply") {
    RunReport rep{"gadget", 3, 9, "gadget"};
    rep.n = 5;
    auto j = nlohmann::json::parse(rep.to_json());
    CHECK(j["n"] == 5);
    CHECK_FALSE(j.contains("m"));
    CHECK_FALSE(j.contains("verdict"));
    CHECK_FALSE(j.contains("timed_out"));
}

TEST_CASE("selftest passes") {
    Run r = run({"selftest", "--rounds", "20", "--seed", "5"});
    CHECK(r.status == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(lines(r.out).size() == 7);
}

}  // TEST_SUITE
