#include "imtw/graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace imtw {

Graph::Graph(int n) : n_(n), m_(0), adj_(n, Bitset(n)) {
    if (n < 0) throw invalid_argument_error("graph: negative vertex count");
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw invalid_argument_error("graph: endpoint out of range: (" +
                                     std::to_string(u) + "," +
                                     std::to_string(v) + ")");
    if (u == v)
        throw invalid_argument_error("graph: self-loop at " +
                                     std::to_string(u));
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
}

VertexSet Graph::vertices() const {
    Bitset all(n_);
    for (int v = 0; v < n_; ++v) all.set(v);
    return all;
}

std::vector<Edge> Graph::edges() const {
    return edges_within(vertices());
}

std::vector<Edge> Graph::edges_within(const VertexSet& x) const {
    std::vector<Edge> out;
    for (int u = x.next(); u >= 0; u = x.next(u + 1)) {
        Bitset later = adj_[u] & x;
        for (int v = later.next(u + 1); v >= 0; v = later.next(v + 1))
            out.emplace_back(u, v);
    }
    return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& x, bool closed) {
    Bitset out(g.n());
    for (int v = x.next(); v >= 0; v = x.next(v + 1)) {
        out |= g.neighbors(v);
        out.set(v);
    }
    if (!closed) out -= x;
    return out;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
    for (int v = s.next(); v >= 0; v = s.next(v + 1))
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (int v = s.next(); v >= 0; v = s.next(v + 1)) {
        Bitset rest = s;
        rest.reset(v);
        if (!rest.is_subset_of(g.neighbors(v))) return false;
    }
    return true;
}

namespace {

int alpha_rec(const Graph& g, Bitset rem) {
    int first = rem.next();
    if (first < 0) return 0;
    // Vertices with no neighbor in rem are always taken.
    int forced = 0;
    for (int v = first; v >= 0; v = rem.next(v + 1)) {
        if (!g.neighbors(v).intersects(rem)) {
            rem.reset(v);
            ++forced;
        }
    }
    // Pivot on a max-degree vertex: either exclude it or take it.
    int pivot = -1, best_deg = -1;
    for (int v = rem.next(); v >= 0; v = rem.next(v + 1)) {
        int d = (g.neighbors(v) & rem).count();
        if (d > best_deg) {
            best_deg = d;
            pivot = v;
        }
    }
    if (pivot < 0) return forced;
    Bitset without = rem;
    without.reset(pivot);
    Bitset taken = rem - g.neighbors(pivot);
    taken.reset(pivot);
    return forced + std::max(alpha_rec(g, without), 1 + alpha_rec(g, taken));
}

} // namespace

int independence_number(const Graph& g, const VertexSet& sub) {
    return alpha_rec(g, sub);
}

VertexSet max_independent_set_in(const Graph& g, const VertexSet& sub) {
    int target = independence_number(g, sub);
    Bitset chosen(g.n());
    Bitset rem = sub;
    while (target > 0) {
        int v = rem.next();
        Bitset after_take = rem - g.neighbors(v);
        after_take.reset(v);
        if (1 + independence_number(g, after_take) == target) {
            chosen.set(v);
            --target;
            rem = after_take;
        } else {
            rem.reset(v);
        }
    }
    return chosen;
}

VertexSet max_independent_set(const Graph& g, int cap) {
    if (g.n() > cap)
        throw cap_exceeded_error("max_independent_set", g.n(), cap);
    return max_independent_set_in(g, g.vertices());
}

namespace {

Graph complement(const Graph& g) {
    Graph c(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

} // namespace

int clique_number(const Graph& g, int cap) {
    if (g.n() > cap) throw cap_exceeded_error("clique_number", g.n(), cap);
    if (g.n() == 0) return 0;
    Graph c = complement(g);
    return independence_number(c, c.vertices());
}

namespace {

bool k_colorable_rec(const Graph& g, const std::vector<int>& order, int idx,
                     int k, int used, std::vector<int>& color) {
    if (idx == (int)order.size()) return true;
    int v = order[idx];
    int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (int u = g.neighbors(v).next(); u >= 0;
             u = g.neighbors(v).next(u + 1)) {
            if (color[u] == c) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        color[v] = c;
        if (k_colorable_rec(g, order, idx + 1, k, std::max(used, c + 1),
                            color))
            return true;
        color[v] = -1;
    }
    return false;
}

} // namespace

int chromatic_number_exact(const Graph& g, int cap) {
    if (g.n() > cap)
        throw cap_exceeded_error("chromatic_number_exact", g.n(), cap);
    if (g.n() == 0) return 0;
    std::vector<int> order(g.n());
    for (int v = 0; v < g.n(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.neighbors(a).count(), db = g.neighbors(b).count();
        return da != db ? da > db : a < b;
    });
    for (int k = std::max(1, clique_number(g, cap));; ++k) {
        std::vector<int> color(g.n(), -1);
        if (k_colorable_rec(g, order, 0, k, 0, color)) return k;
    }
}

namespace {

bool try_augment(const Graph& g, int a, const Bitset& bside,
                 std::vector<int>& match_of, Bitset& visited) {
    Bitset nbrs = g.neighbors(a) & bside;
    for (int b = nbrs.next(); b >= 0; b = nbrs.next(b + 1)) {
        if (visited.test(b)) continue;
        visited.set(b);
        if (match_of[b] < 0 ||
            try_augment(g, match_of[b], bside, match_of, visited)) {
            match_of[b] = a;
            return true;
        }
    }
    return false;
}

} // namespace

Matching max_bipartite_matching(const Graph& g, const VertexSet& a,
                                const VertexSet& b) {
    if (a.intersects(b))
        throw invalid_argument_error("max_bipartite_matching: sides overlap");
    for (int v = a.next(); v >= 0; v = a.next(v + 1))
        if (g.neighbors(v).intersects(a))
            throw invalid_argument_error(
                "max_bipartite_matching: edge inside side A");
    for (int v = b.next(); v >= 0; v = b.next(v + 1))
        if (g.neighbors(v).intersects(b))
            throw invalid_argument_error(
                "max_bipartite_matching: edge inside side B");
    std::vector<int> match_of(g.n(), -1);
    for (int v = a.next(); v >= 0; v = a.next(v + 1)) {
        Bitset visited(g.n());
        try_augment(g, v, b, match_of, visited);
    }
    Matching m;
    for (int v = b.next(); v >= 0; v = b.next(v + 1))
        if (match_of[v] >= 0) m.edges.emplace_back(match_of[v], v);
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

bool is_induced_matching(const Graph& g, const Matching& m) {
    Bitset used(g.n());
    for (auto [u, v] : m.edges) {
        if (!g.has_edge(u, v))
            throw invalid_argument_error("is_induced_matching: non-edge (" +
                                         std::to_string(u) + "," +
                                         std::to_string(v) + ")");
        if (used.test(u) || used.test(v)) return false;
        used.set(u);
        used.set(v);
    }
    for (auto [u, v] : m.edges) {
        Bitset others = used;
        others.reset(u);
        others.reset(v);
        if (g.neighbors(u).intersects(others) ||
            g.neighbors(v).intersects(others))
            return false;
    }
    return true;
}

namespace {

struct TouchingSearch {
    const Graph& g;
    const std::vector<Edge>& cand;
    std::vector<Edge> cur;
    std::vector<Edge> best;

    void run(size_t i, const Bitset& blocked) {
        if (cur.size() > best.size()) best = cur;
        for (size_t j = i; j < cand.size(); ++j) {
            if (cur.size() + (cand.size() - j) <= best.size()) break;
            auto [u, v] = cand[j];
            if (blocked.test(u) || blocked.test(v)) continue;
            Bitset next = blocked | g.neighbors(u) | g.neighbors(v);
            next.set(u);
            next.set(v);
            cur.push_back(cand[j]);
            run(j + 1, next);
            cur.pop_back();
        }
    }
};

} // namespace

std::pair<int, Matching> max_induced_matching_touching(const Graph& g,
                                                       const VertexSet& x,
                                                       int cap) {
    if (g.n() > cap)
        throw cap_exceeded_error("max_induced_matching_touching", g.n(), cap);
    std::vector<Edge> cand;
    for (auto [u, v] : g.edges())
        if (x.test(u) || x.test(v)) cand.emplace_back(u, v);
    TouchingSearch search{g, cand, {}, {}};
    search.run(0, Bitset(g.n()));
    Matching m;
    m.edges = search.best;
    return {m.size(), m};
}

namespace {

// Lexicographically first independent k-subset of pool, or nullopt.
std::optional<Bitset> first_independent_subset(const Graph& g,
                                               const Bitset& pool, int k) {
    Bitset chosen(g.n());
    std::vector<int> stack;
    // DFS over sorted candidates; chosen stays independent.
    std::vector<int> verts = pool.to_vector();
    std::optional<Bitset> found;
    auto rec = [&](auto&& self, size_t from) -> bool {
        if ((int)stack.size() == k) {
            found = chosen;
            return true;
        }
        for (size_t i = from; i < verts.size(); ++i) {
            if (verts.size() - i < k - stack.size()) break;
            int v = verts[i];
            if (g.neighbors(v).intersects(chosen)) continue;
            chosen.set(v);
            stack.push_back(v);
            if (self(self, i + 1)) return true;
            stack.pop_back();
            chosen.reset(v);
        }
        return false;
    };
    rec(rec, 0);
    return found;
}

// Enumerates independent t-subsets of pool in lexicographic order,
// calling fn on each; stops when fn returns true.
bool for_each_independent_subset(const Graph& g, const Bitset& pool, int t,
                                 const std::function<bool(const Bitset&)>& fn);

} // namespace

std::optional<BicliqueWitness> find_induced_biclique(const Graph& g, int t,
                                                     int cap) {
    if (t < 1) throw invalid_argument_error("find_induced_biclique: t < 1");
    if (g.n() > cap)
        throw cap_exceeded_error("find_induced_biclique", g.n(), cap);
    if (t == 1) {
        auto es = g.edges();
        if (es.empty()) return std::nullopt;
        BicliqueWitness w{Bitset(g.n()), Bitset(g.n())};
        w.side_a.set(es[0].first);
        w.side_b.set(es[0].second);
        return w;
    }
    std::optional<BicliqueWitness> result;
    for_each_independent_subset(g, g.vertices(), t, [&](const Bitset& a) {
        Bitset common = g.vertices();
        for (int v = a.next(); v >= 0; v = a.next(v + 1)) common &= g.neighbors(v);
        auto b = first_independent_subset(g, common, t);
        if (b) {
            result = BicliqueWitness{a, *b};
            return true;
        }
        return false;
    });
    return result;
}

namespace {

bool for_each_independent_subset(const Graph& g, const Bitset& pool, int t,
                                 const std::function<bool(const Bitset&)>& fn) {
    std::vector<int> verts = pool.to_vector();
    Bitset chosen(g.n());
    int depth = 0;
    auto rec = [&](auto&& self, size_t from) -> bool {
        if (depth == t) return fn(chosen);
        for (size_t i = from; i < verts.size(); ++i) {
            if ((int)(verts.size() - i) < t - depth) break;
            int v = verts[i];
            if (g.neighbors(v).intersects(chosen)) continue;
            chosen.set(v);
            ++depth;
            if (self(self, i + 1)) return true;
            --depth;
            chosen.reset(v);
        }
        return false;
    };
    return rec(rec, 0);
}

// All ways to pick one partner per anchor vertex such that the picked set is
// independent, pairwise distinct, and each partner sees exactly its anchor
// within the anchor set. Returns the first such set, lexicographic by choice.
std::optional<Bitset> find_matched_side(const Graph& g,
                                        const std::vector<int>& anchors,
                                        const Bitset& anchor_set,
                                        const Bitset& forbidden) {
    int t = (int)anchors.size();
    std::vector<std::vector<int>> cand(t);
    for (int i = 0; i < t; ++i) {
        for (int v = 0; v < g.n(); ++v) {
            if (forbidden.test(v)) continue;
            Bitset in_anchor = g.neighbors(v) & anchor_set;
            if (in_anchor.count() == 1 && in_anchor.test(anchors[i]))
                cand[i].push_back(v);
        }
        if (cand[i].empty()) return std::nullopt;
    }
    Bitset chosen(g.n());
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == t) return true;
        for (int v : cand[i]) {
            if (chosen.test(v) || g.neighbors(v).intersects(chosen)) continue;
            chosen.set(v);
            if (self(self, i + 1)) return true;
            chosen.reset(v);
        }
        return false;
    };
    if (rec(rec, 0)) return chosen;
    return std::nullopt;
}

} // namespace

std::optional<ObstructionWitness> find_t_obstruction(const Graph& g, int t,
                                                     int cap) {
    if (t < 1) throw invalid_argument_error("find_t_obstruction: t < 1");
    if (g.n() > cap)
        throw cap_exceeded_error("find_t_obstruction", g.n(), cap);
    std::optional<ObstructionWitness> result;
    // Ordered pairs (B, C) of induced K_{t,t} sides; A matches B, D matches C.
    for_each_independent_subset(g, g.vertices(), t, [&](const Bitset& bset) {
        Bitset common = g.vertices();
        for (int v = bset.next(); v >= 0; v = bset.next(v + 1))
            common &= g.neighbors(v);
        return for_each_independent_subset(
            g, common, t, [&](const Bitset& cset) {
                // cset must be fully adjacent to all of bset already
                // (subset of common neighborhood), both independent.
                Bitset bc = bset | cset;
                std::vector<int> banchors = bset.to_vector();
                auto aset = find_matched_side(g, banchors, bset, bc);
                if (!aset) return false;
                Bitset abc = bc | *aset;
                std::vector<int> canchors = cset.to_vector();
                auto dset = find_matched_side(g, canchors, cset, abc);
                if (!dset) return false;
                result = ObstructionWitness{*aset, bset, cset, *dset};
                return true;
            });
    });
    return result;
}

bool validate_biclique_witness(const Graph& g, const BicliqueWitness& w,
                               int t) {
    if (w.side_a.count() != t || w.side_b.count() != t) return false;
    if (w.side_a.intersects(w.side_b)) return false;
    if (!is_independent_set(g, w.side_a) || !is_independent_set(g, w.side_b))
        return false;
    for (int u = w.side_a.next(); u >= 0; u = w.side_a.next(u + 1))
        if (!w.side_b.is_subset_of(g.neighbors(u))) return false;
    return true;
}

namespace {

// Exactly a perfect matching between x and y (each vertex sees exactly one
// vertex of the other side, no edges inside either side).
bool induces_perfect_matching(const Graph& g, const Bitset& x,
                              const Bitset& y) {
    if (!is_independent_set(g, x) || !is_independent_set(g, y)) return false;
    for (int v = x.next(); v >= 0; v = x.next(v + 1))
        if ((g.neighbors(v) & y).count() != 1) return false;
    for (int v = y.next(); v >= 0; v = y.next(v + 1))
        if ((g.neighbors(v) & x).count() != 1) return false;
    return true;
}

} // namespace

bool validate_obstruction_witness(const Graph& g, const ObstructionWitness& w,
                                  int t) {
    const Bitset* sets[4] = {&w.a, &w.b, &w.c, &w.d};
    for (int i = 0; i < 4; ++i) {
        if (sets[i]->count() != t) return false;
        if (!is_independent_set(g, *sets[i])) return false;
        for (int j = i + 1; j < 4; ++j)
            if (sets[i]->intersects(*sets[j])) return false;
    }
    if (!induces_perfect_matching(g, w.a, w.b)) return false;
    if (!induces_perfect_matching(g, w.c, w.d)) return false;
    BicliqueWitness bc{w.b, w.c};
    return validate_biclique_witness(g, bc, t);
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                    const VertexSet& x) {
    std::vector<int> local_to_global = x.to_vector();
    std::vector<int> global_to_local(g.n(), -1);
    for (size_t i = 0; i < local_to_global.size(); ++i)
        global_to_local[local_to_global[i]] = (int)i;
    Graph sub((int)local_to_global.size());
    for (auto [u, v] : g.edges_within(x))
        sub.add_edge(global_to_local[u], global_to_local[v]);
    return {std::move(sub), std::move(local_to_global)};
}

bool is_chordal(const Graph& g) {
    int n = g.n();
    if (n == 0) return true;
    // Maximum cardinality search, then perfect elimination check.
    std::vector<int> weight(n, 0), order;
    Bitset numbered(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered.test(v) && (best < 0 || weight[v] > weight[best]))
                best = v;
        numbered.set(best);
        order.push_back(best);
        for (int u = g.neighbors(best).next(); u >= 0;
             u = g.neighbors(best).next(u + 1))
            if (!numbered.test(u)) ++weight[u];
    }
    std::reverse(order.begin(), order.end()); // elimination order
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        Bitset later(n);
        for (int u = g.neighbors(v).next(); u >= 0;
             u = g.neighbors(v).next(u + 1))
            if (pos[u] > i) later.set(u);
        int first = -1, best_pos = n + 1;
        for (int u = later.next(); u >= 0; u = later.next(u + 1))
            if (pos[u] < best_pos) {
                best_pos = pos[u];
                first = u;
            }
        if (first < 0) continue;
        Bitset rest = later;
        rest.reset(first);
        if (!rest.is_subset_of(g.neighbors(first))) return false;
    }
    return true;
}

} // namespace imtw
