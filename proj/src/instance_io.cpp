#include "bfvd/instance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "bfvd/errors.hpp"

namespace bfvd {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        std::size_t start = pos;
        while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos > start) out.push_back(line.substr(start, pos - start));
    }
    return out;
}

long long to_int(std::string_view tok, std::size_t line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

long long to_nonneg(std::string_view tok, std::size_t line, const char* what) {
    long long value = to_int(tok, line);
    if (value < 0) throw ParseError(line, std::string("negative ") + what);
    return value;
}

constexpr long long kMaxVertices = 1'000'000'000;

}  // namespace

Instance parse_instance(std::string_view text) {
    enum class Kind { none, bfvd, wbdd };
    Kind kind = Kind::none;
    long long n = 0, m = 0;
    Graph g;
    WbddInstance wbdd;
    std::optional<BfvdInstance> params;
    std::size_t edges_seen = 0;

    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tok = tokenize(line);
        if (tok.empty()) {
            if (eol == text.size()) break;
            continue;
        }

        if (tok[0] == "p") {
            if (kind != Kind::none) throw ParseError(lineno, "duplicate header");
            if (tok.size() >= 2 && tok[1] == "bfvd") {
                if (tok.size() != 4) throw ParseError(lineno, "header must be 'p bfvd <n> <m>'");
                kind = Kind::bfvd;
            } else if (tok.size() >= 2 && tok[1] == "wbdd") {
                if (tok.size() != 6) throw ParseError(lineno, "header must be 'p wbdd <n> <m> <r> <k>'");
                kind = Kind::wbdd;
                wbdd.r = static_cast<int>(to_nonneg(tok[4], lineno, "r"));
                wbdd.k = static_cast<int>(to_nonneg(tok[5], lineno, "k"));
            } else {
                throw ParseError(lineno, "unknown problem type");
            }
            n = to_nonneg(tok[2], lineno, "vertex count");
            m = to_nonneg(tok[3], lineno, "edge count");
            if (n > kMaxVertices) throw ParseError(lineno, "vertex count too large");
            g = Graph(static_cast<Vertex>(n));
            continue;
        }
        if (kind == Kind::none) throw ParseError(lineno, "expected header 'p bfvd' or 'p wbdd' first");

        if (tok[0] == "e") {
            if (tok.size() != 3) throw ParseError(lineno, "edge line must be 'e <u> <v>'");
            long long u = to_int(tok[1], lineno);
            long long v = to_int(tok[2], lineno);
            if (u < 1 || v < 1 || u > n || v > n) throw ParseError(lineno, "edge endpoint out of range");
            if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
            if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
                throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
            ++edges_seen;
        } else if (tok[0] == "param") {
            if (kind != Kind::bfvd) throw ParseError(lineno, "'param' is only valid for bfvd instances");
            if (params) throw ParseError(lineno, "duplicate param line");
            if (tok.size() != 4) throw ParseError(lineno, "param line must be 'param <i> <j> <k>'");
            BfvdInstance p;
            p.i = static_cast<int>(to_nonneg(tok[1], lineno, "i"));
            p.j = static_cast<int>(to_nonneg(tok[2], lineno, "j"));
            p.k = static_cast<int>(to_nonneg(tok[3], lineno, "k"));
            if (p.i < 1) throw ParseError(lineno, "i must be at least 1");
            if (p.i > p.j) throw ParseError(lineno, "i > j");
            params = p;
        } else if (tok[0] == "w") {
            if (kind != Kind::wbdd) throw ParseError(lineno, "'w' is only valid for wbdd instances");
            if (tok.size() != 3) throw ParseError(lineno, "weight line must be 'w <v> <weight>'");
            long long v = to_int(tok[1], lineno);
            if (v < 1 || v > n) throw ParseError(lineno, "weight vertex out of range");
            long long weight = to_nonneg(tok[2], lineno, "weight");
            if (!wbdd.w.emplace(static_cast<Vertex>(v), static_cast<int>(weight)).second)
                throw ParseError(lineno, "duplicate weight for vertex " + std::to_string(v));
        } else {
            throw ParseError(lineno, "unknown line type '" + std::string(tok[0]) + "'");
        }
    }

    if (kind == Kind::none) throw ParseError(0, "missing header");
    if (static_cast<long long>(edges_seen) != m)
        throw ParseError(0, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges_seen));

    if (kind == Kind::bfvd) {
        if (!params) throw ParseError(0, "missing 'param <i> <j> <k>' line");
        params->g = std::move(g);
        return *params;
    }
    for (Vertex v : g.vertices()) wbdd.w.try_emplace(v, 0);
    wbdd.g = std::move(g);
    return wbdd;
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

namespace {

std::map<Vertex, Vertex> compact_ids(const Graph& g) {
    std::map<Vertex, Vertex> id;
    Vertex next = 1;
    for (const auto& [v, _] : g) id[v] = next++;
    return id;
}

void write_edges(std::ostringstream& out, const Graph& g, const std::map<Vertex, Vertex>& id) {
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) edges.push_back(make_edge(id.at(u), id.at(v)));
    std::sort(edges.begin(), edges.end());
    for (const auto& [u, v] : edges) out << "e " << u << ' ' << v << '\n';
}

}  // namespace

std::string write_instance(const BfvdInstance& inst) {
    auto id = compact_ids(inst.g);
    std::ostringstream out;
    out << "p bfvd " << inst.g.num_vertices() << ' ' << inst.g.num_edges() << '\n';
    write_edges(out, inst.g, id);
    out << "param " << inst.i << ' ' << inst.j << ' ' << inst.k << '\n';
    return out.str();
}

std::string write_instance(const WbddInstance& inst) {
    auto id = compact_ids(inst.g);
    std::ostringstream out;
    out << "p wbdd " << inst.g.num_vertices() << ' ' << inst.g.num_edges() << ' ' << inst.r << ' ' << inst.k
        << '\n';
    write_edges(out, inst.g, id);
    for (const auto& [v, weight] : inst.w)
        if (weight != 0 && inst.g.has_vertex(v)) out << "w " << id.at(v) << ' ' << weight << '\n';
    return out.str();
}

std::string write_instance(const BddInstance& inst) { return write_instance(to_wbdd(inst)); }

VertexSet parse_vertex_list(std::string_view text) {
    std::set<Vertex> out;
    std::size_t lineno = 0, pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        for (auto tok : tokenize(line)) {
            long long v = to_int(tok, lineno);
            if (v < 1) throw ParseError(lineno, "vertex ids must be positive");
            out.insert(static_cast<Vertex>(v));
        }
    }
    return {out.begin(), out.end()};
}

WbddInstance to_wbdd(const BddInstance& inst) {
    WbddInstance out{inst.g, {}, inst.r, inst.k};
    for (Vertex v : inst.g.vertices()) out.w[v] = 0;
    return out;
}

BddInstance to_bdd(const WbddInstance& inst) {
    for (const auto& [v, weight] : inst.w)
        if (weight != 0) throw ContractError("instance has nonzero weight at vertex " + std::to_string(v));
    return {inst.g, inst.r, inst.k};
}

}  // namespace bfvd
