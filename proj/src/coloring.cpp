#include "imtw/coloring.hpp"

#include <algorithm>
#include <queue>

namespace imtw {

namespace {

Layering layering_within(const Graph& g, const VertexSet& domain, int u0,
                         int v0) {
    Layering out;
    Bitset seen(g.n());
    Bitset l0(g.n());
    l0.set(u0);
    l0.set(v0);
    seen = l0;
    out.layers.push_back(l0);
    while (true) {
        Bitset next = neighborhood(g, out.layers.back(), false) & domain;
        next -= seen;
        if (next.none()) break;
        seen |= next;
        out.layers.push_back(next);
    }
    return out;
}

std::vector<Bitset> components_of(const Graph& g, const VertexSet& x) {
    std::vector<Bitset> comps;
    Bitset rem = x;
    while (true) {
        int start = rem.next();
        if (start < 0) break;
        Bitset comp(g.n());
        comp.set(start);
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            Bitset nbrs = g.neighbors(v) & rem;
            for (int u = nbrs.next(); u >= 0; u = nbrs.next(u + 1))
                if (!comp.test(u)) {
                    comp.set(u);
                    q.push(u);
                }
        }
        comps.push_back(comp);
        rem -= comp;
    }
    return comps;
}

} // namespace

Layering bfs_layering(const Graph& g, int u0, int v0) {
    if (!g.has_edge(u0, v0))
        throw invalid_argument_error("bfs_layering: seed pair is not an edge");
    Layering out = layering_within(g, g.vertices(), u0, v0);
    int covered = 0;
    for (const auto& layer : out.layers) covered += layer.count();
    if (covered != g.n())
        throw invalid_argument_error("bfs_layering: graph is disconnected");
    return out;
}

bool is_proper_on(const Graph& g, const VertexSet& x,
                  const std::vector<int>& assignment) {
    for (auto [u, v] : g.edges_within(x)) {
        if (assignment[u] < 0 || assignment[v] < 0) return false;
        if (assignment[u] == assignment[v]) return false;
    }
    for (int v = x.next(); v >= 0; v = x.next(v + 1))
        if (assignment[v] < 0) return false;
    return true;
}

Coloring combine(const Graph& g, const Layering& layering,
                 const std::vector<Coloring>& per_layer) {
    if (per_layer.size() != layering.layers.size())
        throw invalid_argument_error("combine: one coloring per layer needed");
    Coloring out;
    out.assignment.assign(g.n(), -1);
    std::vector<bool> used(2 * g.n() + 2, false);
    for (size_t i = 0; i < layering.layers.size(); ++i) {
        const auto& layer = layering.layers[i];
        if (!is_proper_on(g, layer, per_layer[i].assignment))
            throw invalid_argument_error(
                "combine: layer " + std::to_string(i) +
                " coloring is not proper on its layer");
        for (int v = layer.next(); v >= 0; v = layer.next(v + 1)) {
            int c = 2 * per_layer[i].assignment[v] + (int)(i % 2);
            out.assignment[v] = c;
            if (c < (int)used.size()) used[c] = true;
        }
    }
    for (bool b : used) out.color_count += b ? 1 : 0;
    return out;
}

SplitAB split_AB(const Graph& g, const TreeDecomposition& t,
                 const Layering& layering, int i) {
    if (i < 2) throw invalid_argument_error("split_AB: i must be >= 2");
    SplitAB out{Bitset(g.n()), Bitset(g.n()), Bitset(t.node_count)};
    for (int j = 0; j <= i - 2 && j < (int)layering.layers.size(); ++j) {
        const auto& layer = layering.layers[j];
        for (int v = layer.next(); v >= 0; v = layer.next(v + 1))
            out.prime_nodes |= vertex_subtree(t, v);
    }
    if (i >= (int)layering.layers.size()) return out;
    const auto& li = layering.layers[i];
    for (int v = li.next(); v >= 0; v = li.next(v + 1)) {
        if (vertex_subtree(t, v).intersects(out.prime_nodes))
            out.a.set(v);
        else
            out.b.set(v);
    }
    return out;
}

VertexSet minimal_dominator(const Graph& g, const VertexSet& c,
                            const VertexSet& pool) {
    if (!c.is_subset_of(neighborhood(g, pool, false) | pool))
        throw invalid_argument_error(
            "minimal_dominator: C not dominated by the pool");
    // Only pool vertices with a neighbor in C can matter.
    VertexSet d(g.n());
    for (int v = pool.next(); v >= 0; v = pool.next(v + 1))
        if (g.neighbors(v).intersects(c)) d.set(v);
    if (!c.is_subset_of(neighborhood(g, d, false)))
        throw invalid_argument_error(
            "minimal_dominator: C not inside N(pool)");
    // Drop redundant vertices highest-first so ties keep the lowest index.
    for (int v = g.n() - 1; v >= 0; --v) {
        if (!d.test(v)) continue;
        Bitset without = d;
        without.reset(v);
        if (c.is_subset_of(neighborhood(g, without, false))) d = without;
    }
    return d;
}

namespace {

struct ColorRec {
    const Graph& g;
    const TreeDecomposition& t;

    // Proper coloring of G[x] using colors [0, k); returns k and fills
    // `out` at the vertices of x. `nodes` restricts the decomposition.
    int color_set(const VertexSet& x, const Bitset& nodes, int mu, int omega,
                  std::vector<int>& out, RecursionTrace& trace) {
        int k = 0;
        for (const auto& comp : components_of(g, x)) {
            RecursionTrace child{"component", mu, omega, comp.count(), 0, {}};
            int kc = color_component(comp, nodes, mu, omega, out, child);
            child.colors_used = kc;
            trace.children.push_back(std::move(child));
            k = std::max(k, kc);
        }
        return k;
    }

    Bitset subtree_in(int v, const Bitset& nodes) {
        Bitset s(t.node_count);
        for (int node = nodes.next(); node >= 0; node = nodes.next(node + 1))
            if (t.bags[node].test(v)) s.set(node);
        return s;
    }

    int color_component(const VertexSet& xc, const Bitset& nodes, int mu,
                        int omega, std::vector<int>& out,
                        RecursionTrace& trace) {
        auto edges = g.edges_within(xc);
        if (edges.empty()) {
            for (int v = xc.next(); v >= 0; v = xc.next(v + 1)) out[v] = 0;
            return xc.none() ? 0 : 1;
        }
        if (mu <= 0 || omega <= 1)
            throw base_case_violation(edges[0], mu, omega);

        auto [u0, v0] = edges[0]; // lowest lexicographic seed edge
        Layering layering = layering_within(g, xc, u0, v0);
        int tmax = (int)layering.layers.size();
        std::vector<int> layer_color(g.n(), -1);
        int k_max = 0;
        Bitset prefix(g.n()); // L_0 u ... u L_{i-2}
        for (int i = 0; i < tmax; ++i) {
            const auto& li = layering.layers[i];
            int ki;
            if (i == 0) {
                layer_color[u0] = 0;
                layer_color[v0] = 1;
                ki = 2;
            } else if (i == 1) {
                // chi(L_1) <= chi(N(u0)) + chi(N(v0)): color both full
                // neighborhoods at omega-1, keep only the L_1 part.
                Bitset nu = g.neighbors(u0) & xc;
                Bitset nv = g.neighbors(v0) & xc;
                std::vector<int> cu(g.n(), -1), cv(g.n(), -1);
                RecursionTrace tu{"L1-u", mu, omega - 1, nu.count(), 0, {}};
                int ku = color_set(nu, nodes, mu, omega - 1, cu, tu);
                tu.colors_used = ku;
                trace.children.push_back(std::move(tu));
                RecursionTrace tv{"L1-v", mu, omega - 1, nv.count(), 0, {}};
                int kv = color_set(nv, nodes, mu, omega - 1, cv, tv);
                tv.colors_used = kv;
                trace.children.push_back(std::move(tv));
                for (int v = li.next(); v >= 0; v = li.next(v + 1))
                    layer_color[v] = nu.test(v) ? cu[v] : ku + cv[v];
                ki = ku + kv;
            } else {
                Bitset prime(t.node_count);
                for (int v = prefix.next(); v >= 0; v = prefix.next(v + 1))
                    prime |= subtree_in(v, nodes);
                Bitset aset(g.n()), bset(g.n());
                for (int v = li.next(); v >= 0; v = li.next(v + 1)) {
                    if (subtree_in(v, nodes).intersects(prime))
                        aset.set(v);
                    else
                        bset.set(v);
                }
                std::vector<int> ca(g.n(), -1);
                RecursionTrace ta{"A", mu - 1, omega, aset.count(), 0, {}};
                int ka = color_set(aset, prime, mu - 1, omega, ca, ta);
                ta.colors_used = ka;
                trace.children.push_back(std::move(ta));
                for (int v = aset.next(); v >= 0; v = aset.next(v + 1))
                    layer_color[v] = ca[v];
                int kb = 0;
                for (const auto& comp : components_of(g, bset)) {
                    VertexSet dset = minimal_dominator(
                        g, comp, layering.layers[i - 1]);
                    Bitset ungrouped = comp;
                    int offset = 0;
                    for (int d = dset.next(); d >= 0; d = dset.next(d + 1)) {
                        Bitset grp = g.neighbors(d) & ungrouped;
                        if (grp.none()) continue;
                        ungrouped -= grp;
                        // Color the whole neighborhood (clique number drops
                        // by one there); keep only the first-dominator part.
                        Bitset dom = g.neighbors(d) & xc;
                        std::vector<int> cd(g.n(), -1);
                        RecursionTrace td{"B-dominator", mu, omega - 1,
                                          dom.count(), 0, {}};
                        int kd = color_set(dom, nodes, mu, omega - 1, cd, td);
                        td.colors_used = kd;
                        trace.children.push_back(std::move(td));
                        for (int v = grp.next(); v >= 0; v = grp.next(v + 1))
                            layer_color[v] = ka + offset + cd[v];
                        offset += kd;
                    }
                    kb = std::max(kb, offset); // palette reused per component
                }
                ki = ka + kb;
            }
            k_max = std::max(k_max, ki);
            if (i >= 1) prefix |= layering.layers[i - 1];
        }
        // Parity combination across layers of this component.
        for (int i = 0; i < tmax; ++i) {
            const auto& li = layering.layers[i];
            for (int v = li.next(); v >= 0; v = li.next(v + 1))
                out[v] = 2 * layer_color[v] + (i % 2);
        }
        return 2 * k_max;
    }
};

} // namespace

std::pair<Coloring, RecursionTrace> color_with_bound(const Graph& g,
                                                     const TreeDecomposition& t,
                                                     int mu, int omega) {
    auto res = validate(g, t);
    if (!res.ok)
        throw invalid_argument_error("color_with_bound: invalid T: " +
                                     res.violation.message);
    Bitset all_nodes(t.node_count);
    all_nodes.set_all();
    RecursionTrace trace{"root", mu, omega, g.n(), 0, {}};
    Coloring coloring;
    coloring.assignment.assign(g.n(), -1);
    ColorRec rec{g, t};
    rec.color_set(g.vertices(), all_nodes, mu, omega, coloring.assignment,
                  trace);
    std::vector<bool> used;
    for (int v = 0; v < g.n(); ++v) {
        int c = coloring.assignment[v];
        if (c >= (int)used.size()) used.resize(c + 1, false);
        if (c >= 0) used[c] = true;
    }
    for (bool b : used) coloring.color_count += b ? 1 : 0;
    trace.colors_used = coloring.color_count;
    return {coloring, trace};
}

} // namespace imtw
