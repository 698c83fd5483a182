// Command-line front end: PACE-style .gr/.td in, JSON reports out.

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "imtw/coloring.hpp"
#include "imtw/decomposition.hpp"
#include "imtw/generators.hpp"
#include "imtw/graph.hpp"
#include "imtw/io.hpp"
#include "imtw/oracles.hpp"
#include "imtw/ramsey.hpp"
#include "imtw/transform.hpp"

using nlohmann::json;
using namespace imtw;

namespace {

json base_json() {
    json j;
    j["schemaVersion"] = kSchemaVersion;
    return j;
}

std::vector<int> one_indexed(const Bitset& b) {
    std::vector<int> out;
    for (int v = b.next(); v >= 0; v = b.next(v + 1)) out.push_back(v + 1);
    return out;
}

json edges_json(const std::vector<Edge>& edges) {
    json arr = json::array();
    for (auto [u, v] : edges) arr.push_back({u + 1, v + 1});
    return arr;
}

void emit(const json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

int fail(const std::string& kind, const std::string& message,
         json detail = json::object()) {
    json j = base_json();
    j["error"] = {{"kind", kind}, {"message", message}, {"detail", detail}};
    std::cout << j.dump(2) << "\n";
    return 1;
}

struct Caps {
    int n = kDefaultSearchCap;
};

Caps parse_caps(const std::vector<std::string>& entries) {
    Caps caps;
    for (const auto& entry : entries) {
        auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--caps", "expected key=value");
        std::string key = entry.substr(0, eq);
        int value = std::stoi(entry.substr(eq + 1));
        if (key == "n")
            caps.n = value;
        else
            throw CLI::ValidationError("--caps", "unknown cap '" + key + "'");
    }
    return caps;
}

Graph load_graph(const std::string& path, json& warnings_out) {
    std::vector<std::string> warnings;
    Graph g = parse_gr(read_file(path), &warnings);
    for (const auto& w : warnings) warnings_out.push_back(w);
    return g;
}

json violation_json(const AxiomViolation& v) {
    json j;
    j["axiom"] = v.axiom;
    if (v.vertex >= 0) j["vertex"] = v.vertex + 1;
    if (v.edge.first >= 0) j["edge"] = {v.edge.first + 1, v.edge.second + 1};
    j["message"] = v.message;
    return j;
}

json trace_json(const RecursionTrace& t) {
    json j;
    j["kind"] = t.kind;
    j["mu"] = t.mu;
    j["omega"] = t.omega;
    j["subgraphSize"] = t.subgraph_size;
    j["colorsUsed"] = t.colors_used;
    json kids = json::array();
    for (const auto& c : t.children) kids.push_back(trace_json(c));
    j["children"] = kids;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tree-independence and induced-matching-treewidth toolkit"};
    app.require_subcommand(1);

    std::vector<std::string> caps_entries;
    app.add_option("--caps", caps_entries,
                   "global caps as key=value (supported: n=<k>)");
    std::string manifest_out;
    app.add_option("--manifest", manifest_out,
                   "write a manifest of this invocation to a JSON file");

    std::string gr_path, td_path, out_path;
    std::uint64_t seed = 0;

    auto* validate_cmd =
        app.add_subcommand("validate", "check a .td against a .gr");
    validate_cmd->add_option("graph", gr_path)->required();
    validate_cmd->add_option("decomposition", td_path)->required();

    auto* params_cmd =
        app.add_subcommand("params", "alpha(T) and mu(T) of a decomposition");
    params_cmd->add_option("graph", gr_path)->required();
    params_cmd->add_option("decomposition", td_path)->required();

    auto* exact_cmd =
        app.add_subcommand("exact", "exact tree-alpha or yolov by oracle");
    std::string exact_param;
    std::string witness_out;
    int workers = 1;
    exact_cmd->add_option("graph", gr_path)->required();
    exact_cmd->add_option("--param", exact_param, "treealpha or yolov")
        ->required()
        ->check(CLI::IsMember({"treealpha", "yolov"}));
    exact_cmd->add_option("--witness-out", witness_out,
                          "write the optimal decomposition as .td");
    exact_cmd->add_option("--workers", workers);
    exact_cmd->add_option("-o,--output", out_path);

    auto* transform_cmd =
        app.add_subcommand("transform", "light/heavy bag rewrite T -> T'");
    unsigned long mu_arg = 0, t_arg = 0, omega_arg = 0;
    std::optional<unsigned long> threshold;
    transform_cmd->add_option("graph", gr_path)->required();
    transform_cmd->add_option("decomposition", td_path)->required();
    transform_cmd->add_option("--mu", mu_arg)->required();
    transform_cmd->add_option("--t", t_arg)->required();
    unsigned long threshold_raw = 0;
    auto* threshold_opt = transform_cmd->add_option(
        "--threshold", threshold_raw, "lightness threshold override");
    std::string tprime_out;
    transform_cmd->add_option("--tprime-out", tprime_out,
                              "write T' as a .td file");
    transform_cmd->add_option("-o,--output", out_path);

    auto* color_cmd = app.add_subcommand("color", "bounded proper coloring");
    color_cmd->add_option("graph", gr_path)->required();
    color_cmd->add_option("decomposition", td_path)->required();
    color_cmd->add_option("--mu", mu_arg)->required();
    color_cmd->add_option("--omega", omega_arg)->required();
    color_cmd->add_option("-o,--output", out_path);

    auto* layering_cmd =
        app.add_subcommand("layering", "BFS layering from a seed edge");
    std::string edge_arg;
    layering_cmd->add_option("graph", gr_path)->required();
    layering_cmd->add_option("--edge", edge_arg, "seed edge as u,v (1-indexed)")
        ->required();
    layering_cmd->add_option("-o,--output", out_path);

    auto* find_cmd = app.add_subcommand("find", "structure search");
    int biclique_t = 0, obstruction_t = 0;
    std::vector<int> touching_set;
    find_cmd->add_option("graph", gr_path)->required();
    auto* opt_bic = find_cmd->add_option("--biclique", biclique_t,
                                         "induced K_{t,t}");
    auto* opt_obs =
        find_cmd->add_option("--obstruction", obstruction_t, "t-obstruction");
    auto* opt_imt = find_cmd->add_option(
        "--induced-matching-touching", touching_set,
        "max induced matching touching the given 1-indexed set");
    find_cmd->add_option("-o,--output", out_path);

    auto* gen_cmd = app.add_subcommand("gen", "write a generated .gr");
    std::string family, policy_arg = "none";
    int gen_a = 0, gen_b = 0, gen_n = 0, gen_s = 0, gen_k = 0, gen_t = 0;
    double gen_p = 0.5;
    gen_cmd
        ->add_option("family", family,
                     "biclique|cycle|path|subdivided-biclique|t-obstruction|"
                     "random|chordal")
        ->required();
    gen_cmd->add_option("--a", gen_a);
    gen_cmd->add_option("--b", gen_b);
    gen_cmd->add_option("--n", gen_n);
    gen_cmd->add_option("--s", gen_s);
    gen_cmd->add_option("--k", gen_k);
    gen_cmd->add_option("--t", gen_t);
    gen_cmd->add_option("--p", gen_p);
    gen_cmd->add_option("--policy", policy_arg)
        ->check(CLI::IsMember({"none", "random", "full"}));
    gen_cmd->add_option("--seed", seed);
    gen_cmd->add_option("-o,--output", out_path);

    auto* bounds_cmd =
        app.add_subcommand("bounds", "quantitative bounds as decimal strings");
    std::vector<unsigned long> b_m, b_n, b_c, b_k, b_f;
    bounds_cmd->add_option("--M", b_m, "s,t")->delimiter(',')->expected(2);
    bounds_cmd->add_option("--C", b_c, "mu,t")->delimiter(',')->expected(2);
    bounds_cmd->add_option("--K", b_k, "mu,t")->delimiter(',')->expected(2);
    bounds_cmd->add_option("--f", b_f, "mu,omega")->delimiter(',')->expected(2);
    std::vector<unsigned long> ramsey_targets;
    bounds_cmd->add_option("--ramsey", ramsey_targets, "t1,t2,...")
        ->delimiter(',');
    bounds_cmd->add_option("-o,--output", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Caps caps = parse_caps(caps_entries);

        if (!manifest_out.empty()) {
            RunManifest m;
            m.subcommand = app.get_subcommands().front()->get_name();
            if (!gr_path.empty()) m.input_paths.push_back(gr_path);
            if (!td_path.empty()) m.input_paths.push_back(td_path);
            m.seed = seed;
            m.output_path = out_path;
            m.caps["n"] = caps.n;
            for (int i = 1; i < argc; ++i)
                m.parameters["argv" + std::to_string(i)] = argv[i];
            write_file(manifest_out, manifest_to_json(m));
        }

        json j = base_json();
        j["warnings"] = json::array();

        if (validate_cmd->parsed()) {
            Graph g = load_graph(gr_path, j["warnings"]);
            TreeDecomposition t = parse_td(read_file(td_path));
            auto res = validate(g, t);
            j["ok"] = res.ok;
            if (!res.ok) {
                j["violation"] = violation_json(res.violation);
                emit(j, out_path);
                return 1;
            }
            emit(j, out_path);
            return 0;
        }

        if (params_cmd->parsed()) {
            Graph g = load_graph(gr_path, j["warnings"]);
            TreeDecomposition t = parse_td(read_file(td_path));
            auto res = validate(g, t);
            if (!res.ok)
                return fail("invalid-decomposition", res.violation.message,
                            violation_json(res.violation));
            j["alpha"] = alpha_of(g, t);
            j["mu"] = mu_of(g, t, caps.n);
            emit(j, out_path);
            return 0;
        }

        if (exact_cmd->parsed()) {
            Graph g = load_graph(gr_path, j["warnings"]);
            OracleConfig cfg;
            cfg.max_n = caps.n < cfg.max_n ? caps.n : cfg.max_n;
            cfg.worker_count = workers;
            OracleResult res = exact_param == "treealpha"
                                   ? tree_independence_number(g, cfg)
                                   : induced_matching_treewidth(g, cfg);
            j["param"] = exact_param;
            j["value"] = res.value;
            j["exploredOrderings"] = res.explored_orderings;
            j["witnessTd"] = write_td(res.witness, g.n());
            if (!witness_out.empty())
                write_file(witness_out, write_td(res.witness, g.n()));
            emit(j, out_path);
            return 0;
        }

        if (transform_cmd->parsed()) {
            Graph g = load_graph(gr_path, j["warnings"]);
            TreeDecomposition t = parse_td(read_file(td_path));
            if (threshold_opt->count() > 0) threshold = threshold_raw;
            auto [tprime, report] =
                theorem3_pipeline(g, t, mu_arg, t_arg, threshold);
            j["alphaTprime"] = report.alpha_tprime;
            j["boundK"] = report.bound_k.to_decimal();
            j["claimOutsideHolds"] = report.claim_outside_holds;
            j["claimLightHolds"] = report.claim_light_holds;
            j["claimHeavyHolds"] = report.claim_heavy_holds;
            j["preconditionKttFree"] = report.precondition_ktt_free;
            j["preconditionMuOk"] = report.precondition_mu_ok;
            j["guaranteeClaimed"] = report.guarantee_claimed;
            json per_bag = json::array();
            for (const auto& row : report.per_bag)
                per_bag.push_back({{"node", row.node + 1},
                                   {"alphaOutsideS", row.alpha_outside_s},
                                   {"alphaLightNbhd", row.alpha_light_nbhd},
                                   {"heavyInBag", row.heavy_in_bag}});
            j["perBag"] = per_bag;
            j["tprimeTd"] = write_td(tprime, g.n());
            if (!tprime_out.empty())
                write_file(tprime_out, write_td(tprime, g.n()));
            emit(j, out_path);
            return 0;
        }

        if (color_cmd->parsed()) {
            Graph g = load_graph(gr_path, j["warnings"]);
            TreeDecomposition t = parse_td(read_file(td_path));
            try {
                auto [coloring, trace] =
                    color_with_bound(g, t, (int)mu_arg, (int)omega_arg);
                j["colorCount"] = coloring.color_count;
                j["boundF"] = bound_f(mu_arg, omega_arg).to_decimal();
                j["assignment"] = coloring.assignment;
                j["trace"] = trace_json(trace);
            } catch (const base_case_violation& e) {
                return fail("base-case-violation", e.what(),
                            {{"edge",
                              {e.edge.first + 1, e.edge.second + 1}},
                             {"mu", e.mu},
                             {"omega", e.omega}});
            }
            emit(j, out_path);
            return 0;
        }

        if (layering_cmd->parsed()) {
            Graph g = load_graph(gr_path, j["warnings"]);
            auto comma = edge_arg.find(',');
            if (comma == std::string::npos)
                throw invalid_argument_error("--edge expects u,v");
            int u = std::stoi(edge_arg.substr(0, comma)) - 1;
            int v = std::stoi(edge_arg.substr(comma + 1)) - 1;
            Layering layering = bfs_layering(g, u, v);
            json layers = json::array();
            for (const auto& layer : layering.layers)
                layers.push_back(one_indexed(layer));
            j["layers"] = layers;
            emit(j, out_path);
            return 0;
        }

        if (find_cmd->parsed()) {
            Graph g = load_graph(gr_path, j["warnings"]);
            if (opt_bic->count() > 0) {
                auto w = find_induced_biclique(g, biclique_t, caps.n);
                j["found"] = w.has_value();
                if (w) {
                    if (!validate_biclique_witness(g, *w, biclique_t))
                        return fail("internal", "witness failed revalidation");
                    j["witness"] = {{"sideA", one_indexed(w->side_a)},
                                    {"sideB", one_indexed(w->side_b)}};
                }
            } else if (opt_obs->count() > 0) {
                auto w = find_t_obstruction(g, obstruction_t, caps.n);
                j["found"] = w.has_value();
                if (w) {
                    if (!validate_obstruction_witness(g, *w, obstruction_t))
                        return fail("internal", "witness failed revalidation");
                    j["witness"] = {{"a", one_indexed(w->a)},
                                    {"b", one_indexed(w->b)},
                                    {"c", one_indexed(w->c)},
                                    {"d", one_indexed(w->d)}};
                }
            } else if (opt_imt->count() > 0) {
                Bitset x(g.n());
                for (int v : touching_set) {
                    if (v < 1 || v > g.n())
                        throw invalid_argument_error("set vertex out of range");
                    x.set(v - 1);
                }
                auto [size, matching] =
                    max_induced_matching_touching(g, x, caps.n);
                if (!is_induced_matching(g, matching))
                    return fail("internal", "witness failed revalidation");
                j["size"] = size;
                j["matching"] = edges_json(matching.edges);
            } else {
                throw CLI::ValidationError("find", "choose a search mode");
            }
            emit(j, out_path);
            return 0;
        }

        if (gen_cmd->parsed()) {
            Graph g(0);
            if (family == "biclique")
                g = gen_biclique(gen_a, gen_b);
            else if (family == "cycle")
                g = gen_cycle(gen_n);
            else if (family == "path")
                g = gen_path(gen_n);
            else if (family == "subdivided-biclique")
                g = gen_subdivided_biclique(gen_s, gen_k);
            else if (family == "t-obstruction") {
                OptionalArcPolicy pol = policy_arg == "none"
                                            ? OptionalArcPolicy::None
                                            : policy_arg == "full"
                                                  ? OptionalArcPolicy::Full
                                                  : OptionalArcPolicy::Random;
                g = gen_t_obstruction(gen_t, pol, gen_p, seed);
            } else if (family == "random")
                g = gen_random_graph(gen_n, gen_p, seed);
            else if (family == "chordal")
                g = gen_random_chordal(gen_n, seed);
            else
                throw CLI::ValidationError("gen", "unknown family " + family);
            std::string text = write_gr(g);
            if (out_path.empty())
                std::cout << text;
            else
                write_file(out_path, text);
            return 0;
        }

        if (bounds_cmd->parsed()) {
            if (b_m.size() == 2)
                j["M"] = bound_M(b_m[0], b_m[1]).to_decimal();
            if (b_c.size() == 2)
                j["C"] = bound_C(b_c[0], b_c[1]).to_decimal();
            if (b_k.size() == 2)
                j["K"] = bound_K(b_k[0], b_k[1]).to_decimal();
            if (b_f.size() == 2)
                j["f"] = bound_f(b_f[0], b_f[1]).to_decimal();
            if (!ramsey_targets.empty()) {
                std::vector<BigCount> targets;
                for (auto t : ramsey_targets) targets.emplace_back(t);
                j["ramsey"] = ramsey_upper(targets).to_decimal();
            }
            emit(j, out_path);
            return 0;
        }

        return 2;
    } catch (const parse_error& e) {
        return fail("parse-error", e.what());
    } catch (const cap_exceeded_error& e) {
        return fail("cap-exceeded", e.what());
    } catch (const invalid_argument_error& e) {
        return fail("invalid-argument", e.what());
    } catch (const std::exception& e) {
        return fail("error", e.what());
    }
}
