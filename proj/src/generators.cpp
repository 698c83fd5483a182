#include "imtw/generators.hpp"

#include <algorithm>
#include <numeric>

namespace imtw {

double rng_unit(std::mt19937_64& eng) {
    // 53 top bits -> dyadic rational in [0, 1); identical on every platform.
    return (double)(eng() >> 11) * 0x1.0p-53;
}

std::uint64_t rng_below(std::mt19937_64& eng, std::uint64_t k) {
    if (k == 0) throw invalid_argument_error("rng_below: k must be positive");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % k;
    std::uint64_t x;
    do {
        x = eng();
    } while (x >= limit);
    return x % k;
}

Graph gen_biclique(int s, int t) {
    if (s < 0 || t < 0)
        throw invalid_argument_error("gen_biclique: negative side");
    std::vector<Edge> edges;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) edges.emplace_back(i, s + j);
    return Graph::from_edges(s + t, edges);
}

Graph gen_cycle(int n) {
    if (n < 3) throw invalid_argument_error("gen_cycle: n must be >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph::from_edges(n, edges);
}

Graph gen_path(int n) {
    if (n < 1) throw invalid_argument_error("gen_path: n must be >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph gen_subdivided_biclique(int s, int k) {
    if (s < 0 || k < 0)
        throw invalid_argument_error("gen_subdivided_biclique: negative arg");
    std::vector<Edge> edges;
    int next_id = 2 * s;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            int a = i, b = s + j;
            if (k == 0) {
                edges.emplace_back(a, b);
                continue;
            }
            int prev = a;
            for (int step = 0; step < k; ++step) {
                edges.emplace_back(prev, next_id);
                prev = next_id++;
            }
            edges.emplace_back(prev, b);
        }
    return Graph::from_edges(2 * s + s * s * k, edges);
}

Graph gen_t_obstruction(int t, OptionalArcPolicy policy, double p,
                        std::uint64_t seed) {
    if (t < 1) throw invalid_argument_error("gen_t_obstruction: t must be >= 1");
    std::mt19937_64 eng(seed);
    std::vector<Edge> edges;
    auto A = [&](int i) { return i; };
    auto B = [&](int i) { return t + i; };
    auto C = [&](int i) { return 2 * t + i; };
    auto D = [&](int i) { return 3 * t + i; };
    for (int i = 0; i < t; ++i) {
        edges.emplace_back(A(i), B(i));
        edges.emplace_back(C(i), D(i));
    }
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) edges.emplace_back(B(i), C(j));
    if (policy != OptionalArcPolicy::None) {
        auto want = [&]() {
            return policy == OptionalArcPolicy::Full || rng_unit(eng) < p;
        };
        // Fixed draw order so seeds are reproducible: (A,C), (A,D), (B,D),
        // each pair block in lexicographic order.
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j)
                if (want()) edges.emplace_back(A(i), C(j));
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j)
                if (want()) edges.emplace_back(A(i), D(j));
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j)
                if (want()) edges.emplace_back(B(i), D(j));
    }
    return Graph::from_edges(4 * t, edges);
}

Graph gen_random_graph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw invalid_argument_error("gen_random_graph: negative n");
    if (p < 0.0 || p > 1.0)
        throw invalid_argument_error("gen_random_graph: p outside [0, 1]");
    std::mt19937_64 eng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng_unit(eng) < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph gen_random_chordal(int n, std::uint64_t seed) {
    if (n < 0) throw invalid_argument_error("gen_random_chordal: negative n");
    std::mt19937_64 eng(seed);
    Graph base = [&] {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng_unit(eng) < 1.0 / 3.0) edges.emplace_back(u, v);
        return Graph::from_edges(n, edges);
    }();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(order[i], order[rng_below(eng, (std::uint64_t)i + 1)]);
    // Eliminate along `order`, turning each later-neighborhood into a clique.
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<Bitset> adj;
    adj.reserve(n);
    for (int v = 0; v < n; ++v) adj.push_back(base.neighbors(v));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        std::vector<int> later;
        for (int u = adj[v].next(); u >= 0; u = adj[v].next(u + 1))
            if (pos[u] > i) later.push_back(u);
        for (size_t a = 0; a < later.size(); ++a)
            for (size_t b = a + 1; b < later.size(); ++b) {
                adj[later[a]].set(later[b]);
                adj[later[b]].set(later[a]);
            }
        for (int u : later) edges.emplace_back(v, u);
    }
    return Graph::from_edges(n, edges);
}

} // namespace imtw
