// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Self-contained (library + CLI binary), deterministic seeds.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "imtw/coloring.hpp"
#include "imtw/generators.hpp"
#include "imtw/io.hpp"
#include "imtw/oracles.hpp"
#include "imtw/ramsey.hpp"
#include "imtw/transform.hpp"

using namespace imtw;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int idx, bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << idx << ": " << what
              << std::endl;
    if (!ok) ++g_failures;
}

EliminationOrdering random_order(int n, std::mt19937_64& eng) {
    EliminationOrdering ord;
    ord.order.resize(n);
    std::iota(ord.order.begin(), ord.order.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(ord.order[i], ord.order[rng_below(eng, (uint64_t)i + 1)]);
    return ord;
}

bool proper(const Graph& g, const std::vector<int>& assignment) {
    for (int v = 0; v < g.n(); ++v)
        if (assignment[v] < 0) return false;
    for (auto [u, v] : g.edges())
        if (assignment[u] == assignment[v]) return false;
    return true;
}

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
    std::string cmd = std::string(IMTW_CLI_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "";
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    if (exit_code) *exit_code = WEXITSTATUS(status);
    return out;
}

void criterion1() {
    bool ok = true;
    std::string note;
    ok &= tree_independence_number(gen_biclique(2, 2)).value == 2;
    ok &= tree_independence_number(gen_biclique(3, 3)).value == 3;
    ok &= induced_matching_treewidth(gen_biclique(2, 2)).value == 1;
    ok &= induced_matching_treewidth(gen_biclique(3, 3)).value == 1;
    for (uint64_t seed = 1; seed <= 50 && ok; ++seed) {
        Graph g = gen_random_chordal(4 + (int)(seed % 6), seed);
        ok &= tree_independence_number(g).value == 1;
    }
    // C_8 is the once-subdivided K_{2,2}: lower bound s = 2 meets the oracle
    Graph c8 = gen_subdivided_biclique(2, 1);
    ok &= induced_matching_treewidth(c8).value == 2;
    ok &= induced_matching_treewidth(gen_cycle(8)).value == 2;
    report(1, ok,
           "oracle exact values (K_{2,2}, K_{3,3}, 50 chordal, C_8 = "
           "subdivided K_{2,2} at s=2)");
}

void criterion2() {
    std::mt19937_64 eng(1002);
    bool ok = true;
    for (int it = 0; it < 200; ++it) {
        int n = 1 + (int)rng_below(eng, 8);
        Graph g = gen_random_graph(n, rng_unit(eng), eng());
        if (induced_matching_treewidth(g).value >
            tree_independence_number(g).value)
            ok = false;
    }
    report(2, ok, "sandwich yolov <= tree-alpha on 200 seeded graphs, n <= 8");
}

void criterion3() {
    Graph ob = gen_t_obstruction(2, OptionalArcPolicy::None);
    bool ok = induced_matching_treewidth(ob).value >= 2;
    report(3, ok, "yolov(t-obstruction(2, none)) >= 2 by exact oracle");
}

void criterion4() {
    std::mt19937_64 eng(1004);
    bool ok = true;
    for (int it = 0; it < 500; ++it) {
        int n = 1 + (int)rng_below(eng, 10);
        Graph g = gen_random_graph(n, rng_unit(eng), eng());
        TreeDecomposition t = from_elimination_ordering(g, random_order(n, eng));
        Bitset s = max_independent_set(g);
        Bitset s_light(n);
        for (int v = s.next(); v >= 0; v = s.next(v + 1))
            if (rng_unit(eng) < 0.5) s_light.set(v);
        try {
            TreeDecomposition tp = build_tprime(g, t, s, s_light);
            if (!validate(g, tp).ok) ok = false;
            if (!(build_tprime(g, t, s, Bitset(n)) == t)) ok = false;
        } catch (const std::exception&) {
            ok = false;
        }
    }
    report(4, ok,
           "build_tprime valid on 500 seeded (G,T,S,S_light), n <= 10; "
           "S_light = {} is the identity");
}

void criterion5() {
    std::mt19937_64 eng(1005);
    bool ok = true;
    int done = 0;
    BigCount k22 = bound_K(2, 2);
    while (done < 40) {
        int n = 2 + (int)rng_below(eng, 8);
        Graph g = gen_random_graph(n, 0.15 + 0.25 * rng_unit(eng), eng());
        if (find_induced_biclique(g, 2).has_value()) continue;
        TreeDecomposition t = from_elimination_ordering(g, random_order(n, eng));
        if (verify_mu_at_most(g, t, 2).has_value()) continue;
        auto [tp, rep] = theorem3_pipeline(g, t, 2, 2);
        if (!(BigCount((unsigned long)rep.alpha_tprime) < k22)) ok = false;
        if (!rep.guarantee_claimed) ok = false;
        if ((int)rep.per_bag.size() != t.node_count) ok = false;
        ++done;
    }
    report(5, ok,
           "pipeline on 40 verified K_{2,2}-free instances: alpha(T') < "
           "bound_K(2,2) (saturated BigCount), per-bag rows complete");
}

void criterion6() {
    std::mt19937_64 eng(1006);
    bool ok = true;
    for (int it = 0; it < 300; ++it) {
        int n = 1 + (int)rng_below(eng, 12);
        Graph g = gen_random_graph(n, rng_unit(eng), eng());
        TreeDecomposition t = from_elimination_ordering(g, random_order(n, eng));
        int mu = mu_of(g, t);
        int omega = std::max(1, clique_number(g));
        try {
            auto [coloring, trace] = color_with_bound(g, t, mu, omega);
            if (!proper(g, coloring.assignment)) ok = false;
            if (!(BigCount((unsigned long)coloring.color_count) <=
                  bound_f((unsigned long)mu, (unsigned long)omega)))
                ok = false;
        } catch (const std::exception&) {
            ok = false;
        }
    }
    Graph tri = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    bool raised = false;
    try {
        color_with_bound(tri, single_bag(tri), 1, 2);
    } catch (const base_case_violation&) {
        raised = true;
    }
    ok &= raised;
    report(6, ok,
           "300 seeded colorings proper with colorCount <= f(mu,omega); "
           "lying triangle raises base-case violation");
}

void criterion7() {
    std::mt19937_64 eng(1007);
    bool ok = true;
    int done = 0;
    while (done < 200) {
        int n = 2 + (int)rng_below(eng, 9);
        Graph g = gen_random_graph(n, 0.25 + 0.5 * rng_unit(eng), eng());
        if (g.m() == 0) continue;
        auto edges = g.edges();
        Layering l;
        try {
            l = bfs_layering(g, edges[0].first, edges[0].second);
        } catch (const invalid_argument_error&) {
            continue;
        }
        std::vector<Coloring> per_layer;
        int max_k = 0;
        bool skip = false;
        for (const auto& layer : l.layers) {
            auto [h, map] = induced_subgraph(g, layer);
            int k = h.n() == 0 ? 0 : chromatic_number_exact(h);
            Coloring c;
            c.assignment.assign(g.n(), -1);
            // exact chromatic coloring of the layer by backtracking
            std::vector<int> col(h.n(), -1);
            std::function<bool(int)> go = [&](int i) {
                if (i == h.n()) return true;
                for (int cc = 0; cc < k; ++cc) {
                    bool fits = true;
                    for (int j = 0; j < i && fits; ++j)
                        if (h.has_edge(j, i) && col[j] == cc) fits = false;
                    if (!fits) continue;
                    col[i] = cc;
                    if (go(i + 1)) return true;
                }
                col[i] = -1;
                return false;
            };
            if (h.n() > 0 && !go(0)) {
                skip = true;
                break;
            }
            for (int i = 0; i < h.n(); ++i) c.assignment[map[i]] = col[i];
            c.color_count = k;
            per_layer.push_back(c);
            max_k = std::max(max_k, k);
        }
        if (skip) continue;
        Coloring combined = combine(g, l, per_layer);
        if (!proper(g, combined.assignment)) ok = false;
        if (combined.color_count > 2 * max_k) ok = false;
        ++done;
    }
    report(7, ok,
           "combiner on 200 seeded layerings with exact layer colorings: "
           "proper, colorCount <= 2 * max layer count");
}

void criterion8() {
    // One-sided form (the module invariant): whenever faithful extraction
    // returns a found object, direct exhaustive search classifies the
    // instance identically, and every found witness re-validates. The
    // converse cannot hold below the Ramsey threshold: direct search sees
    // structures the matching-indexed auxiliary coloring cannot express
    // (e.g. the host K_{2,2} at |M| = 2).
    bool ok = true;
    auto check_instance = [&](const Graph& g, const Bitset& a,
                              const Bitset& b, const Matching& m) {
        auto faithful =
            extract_im_or_biclique(g, a, b, m, 1, 2, ExtractionMode::Faithful);
        auto direct =
            extract_im_or_biclique(g, a, b, m, 1, 2, ExtractionMode::Direct);
        // a faithful find carries a re-validated witness, so the instance
        // contains a target object and direct search must also find one;
        // when both object kinds exist the preferred kind may differ
        if (faithful.kind != ExtractionOutcome::Kind::Exhausted &&
            direct.kind == ExtractionOutcome::Kind::Exhausted)
            ok = false;
        for (const auto* out : {&faithful, &direct}) {
            if (out->kind == ExtractionOutcome::Kind::InducedMatchingFound &&
                !(is_induced_matching(g, out->matching) &&
                  out->matching.size() >= 2))
                ok = false;
            if (out->kind == ExtractionOutcome::Kind::BicliqueFound &&
                !validate_biclique_witness(g, out->biclique, 2))
                ok = false;
        }
    };
    // exhaustive over every bipartite pattern around a matching, |M| <= 4
    for (int msize = 1; msize <= 4; ++msize) {
        int off_diag = msize * msize - msize;
        for (unsigned mask = 0; mask < (1u << off_diag); ++mask) {
            std::vector<Edge> edges;
            int bit = 0;
            for (int i = 0; i < msize; ++i)
                for (int j = 0; j < msize; ++j) {
                    if (i == j)
                        edges.emplace_back(i, msize + j);
                    else if (mask & (1u << bit++))
                        edges.emplace_back(i, msize + j);
                }
            Graph g = Graph::from_edges(2 * msize, edges);
            Bitset a(2 * msize), b(2 * msize);
            Matching m;
            for (int i = 0; i < msize; ++i) {
                a.set(i);
                b.set(msize + i);
                m.edges.emplace_back(i, msize + i);
            }
            check_instance(g, a, b, m);
        }
    }
    // |M| = 5 is 2^20 patterns; sweep a seeded sample instead
    std::mt19937_64 eng(1008);
    for (int it = 0; it < 1500; ++it) {
        int msize = 5;
        std::vector<Edge> edges;
        for (int i = 0; i < msize; ++i)
            for (int j = 0; j < msize; ++j)
                if (i == j || rng_unit(eng) < 0.4)
                    edges.emplace_back(i, msize + j);
        Graph g = Graph::from_edges(2 * msize, edges);
        Bitset a(2 * msize), b(2 * msize);
        Matching m;
        for (int i = 0; i < msize; ++i) {
            a.set(i);
            b.set(msize + i);
            m.edges.emplace_back(i, msize + i);
        }
        check_instance(g, a, b, m);
    }
    report(8, ok,
           "extraction agreement, one-sided (faithful-found implies "
           "direct-found): exhaustive |M| <= 4 plus 1500 seeded |M| = 5; "
           "all witnesses re-validate");
}

void criterion9() {
    std::mt19937_64 eng(1009);
    bool ok = true;
    for (int it = 0; it < 500; ++it) {
        int na = 1 + (int)rng_below(eng, 6);
        int nb = 1 + (int)rng_below(eng, 6);
        int n = na + nb;
        std::vector<Edge> edges;
        double p = rng_unit(eng);
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < nb; ++j)
                if (rng_unit(eng) < p) edges.emplace_back(i, na + j);
        Graph g = Graph::from_edges(n, edges);
        Bitset a(n), b(n);
        for (int i = 0; i < na; ++i) a.set(i);
        for (int j = 0; j < nb; ++j) b.set(na + j);
        Matching m = max_bipartite_matching(g, a, b);
        if (m.size() + independence_number(g, g.vertices()) != n) ok = false;
    }
    report(9, ok,
           "Koenig consistency (matching + alpha = n) on 500 seeded "
           "bipartite instances, n <= 12");
}

void criterion10() {
    bool ok = true;
    for (unsigned long w = 1; w <= 8; ++w) ok &= bound_f(0, w) == BigCount(1ul);
    for (unsigned long m = 0; m <= 8; ++m) ok &= bound_f(m, 1) == BigCount(1ul);
    ok &= bound_f(1, 2) == BigCount(12ul);
    ok &= ramsey_upper({BigCount(3ul), BigCount(3ul)}) == BigCount(6ul);
    for (unsigned long k = 1; k <= 10; ++k)
        ok &= ramsey_upper({BigCount(2ul), BigCount(k)}) == BigCount(k);
    int pairs = 0;
    for (unsigned long mu = 1; mu <= 4 && pairs < 20; ++mu)
        for (unsigned long t = 1; t <= 5 && pairs < 20; ++t) {
            if (!(bound_K(mu, t) == BigCount(2ul) * bound_M(mu, t) +
                                        BigCount(mu) * bound_C(mu, t)))
                ok = false;
            ++pairs;
        }
    ok &= pairs == 20;
    report(10, ok,
           "bound formulas: f base cases, f(1,2)=12, ramsey(3,3)=6, "
           "ramsey(2,k)=k, K = 2M + mu*C on 20 pairs (exact arithmetic)");
}

void criterion11() {
    bool ok = true;
    fs::path d = fs::temp_directory_path() / "imtw_acceptance";
    fs::create_directories(d);

    // 20-file corpus: parse(write(...)) identity for .gr and .td
    std::mt19937_64 eng(1011);
    for (int i = 0; i < 20; ++i) {
        int n = 1 + (int)rng_below(eng, 10);
        Graph g = gen_random_graph(n, rng_unit(eng), eng());
        std::string gr = write_gr(g);
        if (write_gr(parse_gr(gr)) != gr) ok = false;
        TreeDecomposition t = from_elimination_ordering(g, random_order(n, eng));
        std::string td = write_td(t, n);
        int n2 = 0;
        TreeDecomposition back = parse_td(td, &n2);
        if (!(back == t) || n2 != n || write_td(back, n2) != td) ok = false;
    }

    // golden JSON byte-stability across two consecutive CLI runs
    std::ofstream((d / "c5.gr").string()) << "p tw 5 5\n1 2\n1 5\n2 3\n3 4\n4 5\n";
    std::ofstream((d / "c5.td").string()) << "s td 1 5 5\nb 1 1 2 3 4 5\n";
    std::vector<std::string> cmds = {
        "params " + (d / "c5.gr").string() + " " + (d / "c5.td").string(),
        "exact " + (d / "c5.gr").string() + " --param treealpha",
        "transform " + (d / "c5.gr").string() + " " + (d / "c5.td").string() +
            " --mu 1 --t 2",
        "color " + (d / "c5.gr").string() + " " + (d / "c5.td").string() +
            " --mu 1 --omega 2",
        std::string("bounds --M 2,2 --K 2,2 --f 1,2 --ramsey 3,3")};
    for (const std::string& cmd : cmds) {
        int code1 = -1, code2 = -1;
        std::string first = run_cli(cmd, &code1);
        std::string second = run_cli(cmd, &code2);
        if (code1 != 0 || code2 != 0 || first.empty() || first != second)
            ok = false;
    }
    report(11, ok,
           "CLI round-trips on a 20-file corpus; golden JSON byte-stable "
           "across two consecutive runs");
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    if (g_failures == 0)
        std::cout << "ALL ACCEPTANCE CRITERIA PASSED" << std::endl;
    else
        std::cout << g_failures << " acceptance criteria FAILED" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
