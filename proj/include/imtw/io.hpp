#ifndef IMTW_IO_HPP
#define IMTW_IO_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "imtw/decomposition.hpp"
#include "imtw/graph.hpp"

namespace imtw {

constexpr int kSchemaVersion = 1;

// PACE-style graph file: header `p tw <n> <m>`, then one `<u> <v>` line per
// edge, 1-indexed; `c ...` lines are comments. Vertices are shifted to
// 0-indexed internally. Duplicate edges are deduplicated with a warning.
Graph parse_gr(const std::string& text,
               std::vector<std::string>* warnings = nullptr);
std::string write_gr(const Graph& g);

// PACE-style decomposition file: header `s td <bags> <maxBagSize> <n>`,
// bag lines `b <id> <v...>`, remaining lines tree edges, all 1-indexed.
// Parsing does not validate the decomposition.
TreeDecomposition parse_td(const std::string& text, int* n_out = nullptr,
                           std::vector<std::string>* warnings = nullptr);
std::string write_td(const TreeDecomposition& t, int n);

// One invocation's full recipe; round-trips losslessly through JSON.
struct RunManifest {
    std::string subcommand;
    std::vector<std::string> input_paths;
    std::map<std::string, std::string> parameters;
    std::uint64_t seed = 0;
    std::string output_path;
    std::map<std::string, int> caps;

    bool operator==(const RunManifest&) const = default;
};

std::string manifest_to_json(const RunManifest& m);
RunManifest manifest_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace imtw

#endif
