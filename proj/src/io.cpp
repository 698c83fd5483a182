#include "imtw/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace imtw {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

long to_long(const std::string& tok, const std::string& what) {
    try {
        size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw parse_error("malformed " + what + ": '" + tok + "'");
    }
}

} // namespace

Graph parse_gr(const std::string& text, std::vector<std::string>* warnings) {
    std::istringstream in(text);
    std::string line;
    long n = -1, m = -1;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    while (std::getline(in, line)) {
        auto toks = split_ws(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n >= 0) throw parse_error("duplicate p-line");
            if (toks.size() != 4 || toks[1] != "tw")
                throw parse_error("malformed header, expected 'p tw n m'");
            n = to_long(toks[2], "vertex count");
            m = to_long(toks[3], "edge count");
            if (n < 0 || m < 0) throw parse_error("negative count in header");
            continue;
        }
        if (n < 0) throw parse_error("edge line before header");
        if (toks.size() != 2) throw parse_error("malformed edge line: " + line);
        long u = to_long(toks[0], "endpoint");
        long v = to_long(toks[1], "endpoint");
        if (u < 1 || u > n || v < 1 || v > n)
            throw parse_error("endpoint out of range 1.." + std::to_string(n));
        if (u == v) throw parse_error("self-loop at " + std::to_string(u));
        Edge e{(int)std::min(u, v) - 1, (int)std::max(u, v) - 1};
        if (!seen.insert(e).second) {
            if (warnings)
                warnings->push_back("duplicate edge " + std::to_string(u) +
                                    " " + std::to_string(v));
            continue;
        }
        edges.push_back(e);
    }
    if (n < 0) throw parse_error("missing header");
    if ((long)edges.size() != m && warnings)
        warnings->push_back("header announced " + std::to_string(m) +
                            " edges, found " + std::to_string(edges.size()));
    return Graph::from_edges((int)n, edges);
}

std::string write_gr(const Graph& g) {
    std::ostringstream out;
    auto edges = g.edges_within(g.vertices()); // already sorted
    out << "p tw " << g.n() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

TreeDecomposition parse_td(const std::string& text, int* n_out,
                           std::vector<std::string>* warnings) {
    std::istringstream in(text);
    std::string line;
    long bags = -1, max_bag = -1, n = -1;
    TreeDecomposition t;
    std::vector<bool> have_bag;
    while (std::getline(in, line)) {
        auto toks = split_ws(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "s") {
            if (bags >= 0) throw parse_error("duplicate s-line");
            if (toks.size() != 5 || toks[1] != "td")
                throw parse_error(
                    "malformed header, expected 's td bags maxBagSize n'");
            bags = to_long(toks[2], "bag count");
            max_bag = to_long(toks[3], "max bag size");
            n = to_long(toks[4], "vertex count");
            if (bags < 0 || max_bag < 0 || n < 0)
                throw parse_error("negative count in header");
            t.node_count = (int)bags;
            t.bags.assign(bags, Bitset((int)n));
            have_bag.assign(bags, false);
            continue;
        }
        if (bags < 0) throw parse_error("content line before header");
        if (toks[0] == "b") {
            if (toks.size() < 2) throw parse_error("malformed bag line");
            long id = to_long(toks[1], "bag id");
            if (id < 1 || id > bags)
                throw parse_error("bag id out of range: " + toks[1]);
            if (have_bag[id - 1]) throw parse_error("duplicate bag " + toks[1]);
            have_bag[id - 1] = true;
            for (size_t i = 2; i < toks.size(); ++i) {
                long v = to_long(toks[i], "bag vertex");
                if (v < 1 || v > n)
                    throw parse_error("bag vertex out of range: " + toks[i]);
                t.bags[id - 1].set((int)v - 1);
            }
            if ((long)t.bags[id - 1].count() > max_bag && warnings)
                warnings->push_back("bag " + toks[1] +
                                    " exceeds declared maxBagSize");
            continue;
        }
        if (toks.size() != 2) throw parse_error("malformed tree edge: " + line);
        long x = to_long(toks[0], "tree node");
        long y = to_long(toks[1], "tree node");
        if (x < 1 || x > bags || y < 1 || y > bags)
            throw parse_error("tree edge node out of range");
        t.tree_edges.emplace_back((int)x - 1, (int)y - 1);
    }
    if (bags < 0) throw parse_error("missing header");
    for (long i = 0; i < bags; ++i)
        if (!have_bag[i] && warnings)
            warnings->push_back("bag " + std::to_string(i + 1) +
                                " not declared; treated as empty");
    if (n_out) *n_out = (int)n;
    return t;
}

std::string write_td(const TreeDecomposition& t, int n) {
    std::ostringstream out;
    int max_bag = 0;
    for (const auto& bag : t.bags) max_bag = std::max(max_bag, bag.count());
    out << "s td " << t.node_count << ' ' << max_bag << ' ' << n << '\n';
    for (int i = 0; i < t.node_count; ++i) {
        out << "b " << i + 1;
        for (int v = t.bags[i].next(); v >= 0; v = t.bags[i].next(v + 1))
            out << ' ' << v + 1;
        out << '\n';
    }
    auto edges = t.tree_edges;
    for (auto& [x, y] : edges)
        if (x > y) std::swap(x, y);
    std::sort(edges.begin(), edges.end());
    for (auto [x, y] : edges) out << x + 1 << ' ' << y + 1 << '\n';
    return out.str();
}

std::string manifest_to_json(const RunManifest& m) {
    nlohmann::json j;
    j["schemaVersion"] = kSchemaVersion;
    j["subcommand"] = m.subcommand;
    j["inputPaths"] = m.input_paths;
    j["parameters"] = m.parameters;
    j["seed"] = m.seed;
    j["outputPath"] = m.output_path;
    j["caps"] = m.caps;
    return j.dump(2) + "\n";
}

RunManifest manifest_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("manifest: ") + e.what());
    }
    RunManifest m;
    try {
        m.subcommand = j.at("subcommand").get<std::string>();
        m.input_paths = j.at("inputPaths").get<std::vector<std::string>>();
        m.parameters =
            j.at("parameters").get<std::map<std::string, std::string>>();
        m.seed = j.at("seed").get<std::uint64_t>();
        m.output_path = j.at("outputPath").get<std::string>();
        m.caps = j.at("caps").get<std::map<std::string, int>>();
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("manifest: ") + e.what());
    }
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot write " + path);
    out << content;
}

} // namespace imtw
