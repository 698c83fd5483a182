#include "imtw/oracles.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

namespace imtw {

namespace {

uint64_t factorial(int n) {
    uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::vector<int> permutation_by_rank(int n, uint64_t rank) {
    std::vector<int> avail(n), out;
    for (int i = 0; i < n; ++i) avail[i] = i;
    out.reserve(n);
    uint64_t f = factorial(n);
    for (int i = n; i >= 1; --i) {
        f /= i;
        int idx = (int)(rank / f);
        rank %= f;
        out.push_back(avail[idx]);
        avail.erase(avail.begin() + idx);
    }
    return out;
}

// All automorphisms of g by backtracking on adjacency-compatible maps.
// Gives up (returns empty) beyond the stated limit; pruning is optional.
std::vector<std::vector<int>> automorphisms(const Graph& g, size_t limit) {
    int n = g.n();
    std::vector<std::vector<int>> out;
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    bool overflow = false;
    auto rec = [&](auto&& self, int v) -> void {
        if (overflow) return;
        if (v == n) {
            out.push_back(map);
            if (out.size() > limit) overflow = true;
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w]) continue;
            if (g.neighbors(w).count() != g.neighbors(v).count()) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = g.has_edge(u, v) == g.has_edge(map[u], w);
            if (!ok) continue;
            map[v] = w;
            used[w] = true;
            self(self, v + 1);
            used[w] = false;
            map[v] = -1;
        }
    };
    rec(rec, 0);
    if (overflow) return {};
    return out;
}

bool lex_minimal_in_orbit(const std::vector<int>& perm,
                          const std::vector<std::vector<int>>& auts) {
    for (const auto& sigma : auts) {
        for (size_t i = 0; i < perm.size(); ++i) {
            int a = sigma[perm[i]], b = perm[i];
            if (a < b) return false;
            if (a > b) break;
        }
    }
    return true;
}

struct BlockResult {
    int value = -1;            // local minimum, -1 if nothing evaluated
    uint64_t first_rank = 0;   // first rank attaining it
    uint64_t explored = 0;
};

enum class Functional { Alpha, Mu };

// Max of the bag functional over the fill decomposition of ord, aborting
// early once the running max reaches `stop_at` (cannot improve the best).
// Bag functionals are memoized by bag mask across orderings.
int decomposition_value(const Graph& g, const std::vector<int>& ord,
                        Functional fn, int stop_at,
                        std::unordered_map<Bitset, int, BitsetHash>& memo) {
    int n = g.n();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[ord[i]] = i;
    std::vector<Bitset> fill(n, Bitset(n));
    for (int v = 0; v < n; ++v) fill[v] = g.neighbors(v);
    int value = 0;
    for (int i = 0; i < n; ++i) {
        int v = ord[i];
        Bitset bag(n);
        for (int u = fill[v].next(); u >= 0; u = fill[v].next(u + 1))
            if (pos[u] > i) bag.set(u);
        auto verts = bag.to_vector();
        for (size_t a = 0; a < verts.size(); ++a)
            for (size_t b = a + 1; b < verts.size(); ++b) {
                fill[verts[a]].set(verts[b]);
                fill[verts[b]].set(verts[a]);
            }
        bag.set(v);
        auto it = memo.find(bag);
        int bag_value;
        if (it != memo.end()) {
            bag_value = it->second;
        } else {
            bag_value = fn == Functional::Alpha
                            ? independence_number(g, bag)
                            : max_induced_matching_touching(g, bag, g.n()).first;
            memo.emplace(bag, bag_value);
        }
        value = std::max(value, bag_value);
        if (value >= stop_at) return value;
    }
    return value;
}

BlockResult scan_block(const Graph& g, Functional fn, uint64_t begin,
                       uint64_t end, int lower_bound,
                       const std::vector<std::vector<int>>& auts) {
    BlockResult res;
    if (begin >= end) return res;
    std::vector<int> perm = permutation_by_rank(g.n(), begin);
    std::unordered_map<Bitset, int, BitsetHash> memo;
    int best = g.n() + 1;
    for (uint64_t rank = begin; rank < end; ++rank) {
        if (auts.empty() || lex_minimal_in_orbit(perm, auts)) {
            ++res.explored;
            int value = decomposition_value(g, perm, fn, best, memo);
            if (value < best) {
                best = value;
                res.value = value;
                res.first_rank = rank;
                if (best <= lower_bound) break;
            }
        }
        std::next_permutation(perm.begin(), perm.end());
    }
    return res;
}

OracleResult minimize(const Graph& g, Functional fn, const OracleConfig& cfg) {
    if (cfg.max_n < 1) throw invalid_argument_error("oracle: max_n < 1");
    if (g.n() > cfg.max_n)
        throw cap_exceeded_error("oracle", g.n(), cfg.max_n);
    if (g.n() == 0) {
        OracleResult r;
        r.witness = single_bag(g);
        return r;
    }
    int lower_bound;
    if (fn == Functional::Alpha)
        lower_bound = 1;
    else
        lower_bound = g.m() > 0 ? 1 : 0;

    std::vector<std::vector<int>> auts;
    if (cfg.symmetry_pruning) auts = automorphisms(g, 5000);

    uint64_t total = factorial(g.n());
    int workers = std::max(1, cfg.worker_count);
    if ((uint64_t)workers > total) workers = (int)total;
    std::vector<BlockResult> results(workers);
    if (workers == 1) {
        results[0] = scan_block(g, fn, 0, total, lower_bound, auts);
    } else {
        std::vector<std::thread> threads;
        uint64_t block = (total + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            uint64_t b = (uint64_t)w * block;
            uint64_t e = std::min(total, b + block);
            threads.emplace_back([&, w, b, e] {
                results[w] = scan_block(g, fn, b, e, lower_bound, auts);
            });
        }
        for (auto& th : threads) th.join();
    }
    // Deterministic reduction: minimum value, then earliest attaining rank.
    OracleResult out;
    int best = g.n() + 1;
    uint64_t best_rank = 0;
    for (const auto& r : results) {
        out.explored_orderings += r.explored;
        if (r.value < 0) continue;
        if (r.value < best || (r.value == best && r.first_rank < best_rank)) {
            best = r.value;
            best_rank = r.first_rank;
        }
    }
    out.value = best;
    EliminationOrdering ord{permutation_by_rank(g.n(), best_rank)};
    out.witness = from_elimination_ordering(g, ord);
    return out;
}

} // namespace

OracleResult tree_independence_number(const Graph& g,
                                      const OracleConfig& cfg) {
    return minimize(g, Functional::Alpha, cfg);
}

OracleResult induced_matching_treewidth(const Graph& g,
                                        const OracleConfig& cfg) {
    return minimize(g, Functional::Mu, cfg);
}

std::optional<WitnessReport> verify_mu_at_most(const Graph& g,
                                               const TreeDecomposition& t,
                                               int mu, int cap) {
    for (int node = 0; node < t.node_count; ++node) {
        auto [size, matching] =
            max_induced_matching_touching(g, t.bags[node], cap);
        if (size > mu) {
            WitnessReport w;
            w.kind = WitnessReport::Kind::InducedMatching;
            w.matching.edges.assign(matching.edges.begin(),
                                    matching.edges.begin() + mu + 1);
            w.node = node;
            w.message = "bag " + std::to_string(node) +
                        " is touched by an induced matching of size " +
                        std::to_string(mu + 1);
            return w;
        }
    }
    return std::nullopt;
}

} // namespace imtw
