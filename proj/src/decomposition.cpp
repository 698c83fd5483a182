#include "imtw/decomposition.hpp"

#include <algorithm>
#include <queue>

namespace imtw {

bool operator==(const TreeDecomposition& a, const TreeDecomposition& b) {
    return a.node_count == b.node_count && a.tree_edges == b.tree_edges &&
           a.bags == b.bags;
}

namespace {

// Adjacency lists of the decomposition tree; rejects out-of-range nodes.
std::vector<std::vector<int>> tree_adjacency(const TreeDecomposition& t) {
    std::vector<std::vector<int>> adj(t.node_count);
    for (auto [x, y] : t.tree_edges) {
        if (x < 0 || x >= t.node_count || y < 0 || y >= t.node_count)
            throw invalid_argument_error("decomposition: tree edge node out of range");
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    return adj;
}

bool is_tree(const TreeDecomposition& t) {
    if (t.node_count == 0) return false;
    if ((int)t.tree_edges.size() != t.node_count - 1) return false;
    auto adj = tree_adjacency(t);
    std::vector<bool> seen(t.node_count, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int reached = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = true;
                ++reached;
                q.push(y);
            }
    }
    return reached == t.node_count;
}

// Connectivity of {nodes holding v} inside the tree, by BFS.
bool subtree_connected(const TreeDecomposition& t,
                       const std::vector<std::vector<int>>& adj,
                       const Bitset& nodes) {
    int start = nodes.next();
    if (start < 0) return false;
    Bitset seen(t.node_count);
    seen.set(start);
    std::queue<int> q;
    q.push(start);
    int reached = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : adj[x])
            if (nodes.test(y) && !seen.test(y)) {
                seen.set(y);
                ++reached;
                q.push(y);
            }
    }
    return reached == nodes.count();
}

} // namespace

ValidationResult validate_on(const Graph& g, const VertexSet& x,
                             const TreeDecomposition& t) {
    ValidationResult r;
    if ((int)t.bags.size() != t.node_count) {
        r.ok = false;
        r.violation = {0, -1, {-1, -1}, "bag count differs from node count"};
        return r;
    }
    if (!is_tree(t)) {
        r.ok = false;
        r.violation = {0, -1, {-1, -1}, "tree edges do not form a tree"};
        return r;
    }
    for (const auto& bag : t.bags) {
        if (bag.universe() != g.n()) {
            r.ok = false;
            r.violation = {0, -1, {-1, -1}, "bag universe differs from graph"};
            return r;
        }
    }
    auto adj = tree_adjacency(t);
    // Axiom 1 and 3 per vertex of G[X].
    for (int v = x.next(); v >= 0; v = x.next(v + 1)) {
        Bitset holders(t.node_count);
        for (int node = 0; node < t.node_count; ++node)
            if (t.bags[node].test(v) && /* bag cut to X */ x.test(v))
                holders.set(node);
        if (holders.none()) {
            r.ok = false;
            r.violation = {1, v, {-1, -1},
                           "vertex " + std::to_string(v) + " in no bag"};
            return r;
        }
        if (!subtree_connected(t, adj, holders)) {
            r.ok = false;
            r.violation = {3, v, {-1, -1},
                           "nodes holding vertex " + std::to_string(v) +
                               " are disconnected"};
            return r;
        }
    }
    // Axiom 2 per edge of G[X].
    for (auto [u, v] : g.edges_within(x)) {
        bool covered = false;
        for (int node = 0; node < t.node_count && !covered; ++node)
            covered = t.bags[node].test(u) && t.bags[node].test(v);
        if (!covered) {
            r.ok = false;
            r.violation = {2, -1, {u, v},
                           "edge (" + std::to_string(u) + "," +
                               std::to_string(v) + ") in no bag"};
            return r;
        }
    }
    return r;
}

ValidationResult validate(const Graph& g, const TreeDecomposition& t) {
    return validate_on(g, g.vertices(), t);
}

Bitset vertex_subtree(const TreeDecomposition& t, int v) {
    Bitset nodes(t.node_count);
    for (int node = 0; node < t.node_count; ++node)
        if (t.bags[node].test(v)) nodes.set(node);
    if (nodes.none())
        throw invalid_argument_error("vertex_subtree: vertex " +
                                     std::to_string(v) + " in no bag");
    return nodes;
}

int alpha_of(const Graph& g, const TreeDecomposition& t) {
    int best = 0;
    for (const auto& bag : t.bags)
        best = std::max(best, independence_number(g, bag));
    return best;
}

int mu_of(const Graph& g, const TreeDecomposition& t, int cap) {
    int best = 0;
    for (const auto& bag : t.bags)
        best = std::max(best, max_induced_matching_touching(g, bag, cap).first);
    return best;
}

TreeDecomposition restrict(const Graph& g, const TreeDecomposition& t,
                           const Bitset& nodes, const VertexSet& x) {
    std::vector<int> id_map(t.node_count, -1);
    TreeDecomposition out;
    for (int node = nodes.next(); node >= 0; node = nodes.next(node + 1)) {
        id_map[node] = out.node_count++;
        out.bags.push_back(t.bags[node] & x);
    }
    if (out.node_count == 0)
        throw invalid_argument_error("restrict: empty node set");
    for (auto [a, b] : t.tree_edges)
        if (id_map[a] >= 0 && id_map[b] >= 0)
            out.tree_edges.emplace_back(id_map[a], id_map[b]);
    for (int v = x.next(); v >= 0; v = x.next(v + 1)) {
        if (!(vertex_subtree(t, v) & nodes).any())
            throw invalid_argument_error(
                "restrict: vertex " + std::to_string(v) +
                " of X has no node inside the given subtree");
    }
    auto res = validate_on(g, x, out);
    if (!res.ok)
        throw invalid_argument_error("restrict: result invalid: " +
                                     res.violation.message);
    return out;
}

TreeDecomposition from_elimination_ordering(const Graph& g,
                                            const EliminationOrdering& ord) {
    int n = g.n();
    if ((int)ord.order.size() != n)
        throw invalid_argument_error("from_elimination_ordering: wrong length");
    {
        std::vector<bool> seen(n, false);
        for (int v : ord.order) {
            if (v < 0 || v >= n || seen[v])
                throw invalid_argument_error(
                    "from_elimination_ordering: not a permutation");
            seen[v] = true;
        }
    }
    if (n == 0) return single_bag(g);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[ord.order[i]] = i;
    // Fill graph: eliminate in order, completing later neighborhoods.
    std::vector<Bitset> fill(n, Bitset(n));
    for (int v = 0; v < n; ++v) fill[v] = g.neighbors(v);
    std::vector<Bitset> bag(n, Bitset(n)); // bag[i] for ord.order[i]
    for (int i = 0; i < n; ++i) {
        int v = ord.order[i];
        Bitset later(n);
        for (int u = fill[v].next(); u >= 0; u = fill[v].next(u + 1))
            if (pos[u] > i) later.set(u);
        bag[i] = later;
        bag[i].set(v);
        auto verts = later.to_vector();
        for (size_t a = 0; a < verts.size(); ++a)
            for (size_t b = a + 1; b < verts.size(); ++b) {
                fill[verts[a]].set(verts[b]);
                fill[verts[b]].set(verts[a]);
            }
    }
    TreeDecomposition t;
    t.node_count = n;
    t.bags = bag;
    for (int i = 0; i < n; ++i) {
        int v = ord.order[i];
        Bitset later = bag[i];
        later.reset(v);
        int parent = -1, best = n;
        for (int u = later.next(); u >= 0; u = later.next(u + 1))
            if (pos[u] < best) {
                best = pos[u];
                parent = u;
            }
        if (parent >= 0)
            t.tree_edges.emplace_back(i, pos[parent]);
        else if (i + 1 < n)
            // Isolated elimination root (end of a component): chain to the
            // next node to keep the node set a single tree.
            t.tree_edges.emplace_back(i, i + 1);
    }
    return t;
}

TreeDecomposition single_bag(const Graph& g) {
    TreeDecomposition t;
    t.node_count = 1;
    t.bags.push_back(g.vertices());
    return t;
}

} // namespace imtw
