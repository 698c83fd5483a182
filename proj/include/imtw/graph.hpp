#ifndef IMTW_GRAPH_HPP
#define IMTW_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "imtw/bitset.hpp"
#include "imtw/errors.hpp"

namespace imtw {

using VertexSet = Bitset;
using Edge = std::pair<int, int>;

// Simple undirected graph over vertices 0..n-1 with dense adjacency rows.
// Immutable once built through from_edges; safe to share across threads.
class Graph {
public:
    explicit Graph(int n);

    // Deduplicates edges; rejects self-loops and out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    void add_edge(int u, int v);

    int n() const { return n_; }
    int m() const { return m_; }
    bool has_edge(int u, int v) const { return u != v && adj_[u].test(v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }

    VertexSet vertices() const;
    std::vector<Edge> edges() const;

    // Edges of G[X], endpoint pairs (u,v) with u < v, in lexicographic order.
    std::vector<Edge> edges_within(const VertexSet& X) const;

private:
    int n_;
    int m_;
    std::vector<Bitset> adj_;
};

struct Matching {
    std::vector<Edge> edges;
    int size() const { return (int)edges.size(); }
};

struct BicliqueWitness {
    VertexSet side_a;
    VertexSet side_b;
};

struct ObstructionWitness {
    VertexSet a, b, c, d;
};

inline constexpr int kDefaultSearchCap = 20;
inline constexpr int kObstructionSearchCap = 16;

// N[X] (closed) or N(X) = N[X] \ X (open); empty X yields the empty set.
VertexSet neighborhood(const Graph& g, const VertexSet& x, bool closed);

bool is_independent_set(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);

// Exact independence number of G[sub]; no cap (used on small bags).
int independence_number(const Graph& g, const VertexSet& sub);

// Lexicographically smallest maximum independent set of G[sub].
VertexSet max_independent_set_in(const Graph& g, const VertexSet& sub);
VertexSet max_independent_set(const Graph& g, int cap = kDefaultSearchCap);

int clique_number(const Graph& g, int cap = kDefaultSearchCap);
int chromatic_number_exact(const Graph& g, int cap = kDefaultSearchCap);

// Maximum matching of G[A u B] via augmenting paths. Requires A, B disjoint
// with no edge inside either side.
Matching max_bipartite_matching(const Graph& g, const VertexSet& a,
                                const VertexSet& b);

// True iff M's edges are vertex-disjoint and no edge of G joins two of them.
// Rejects pairs that are not edges of G.
bool is_induced_matching(const Graph& g, const Matching& m);

// Maximum induced matching of G with every edge meeting X, plus a witness.
std::pair<int, Matching> max_induced_matching_touching(
    const Graph& g, const VertexSet& x, int cap = kDefaultSearchCap);

std::optional<BicliqueWitness> find_induced_biclique(
    const Graph& g, int t, int cap = kDefaultSearchCap);

std::optional<ObstructionWitness> find_t_obstruction(
    const Graph& g, int t, int cap = kObstructionSearchCap);

bool validate_biclique_witness(const Graph& g, const BicliqueWitness& w, int t);
bool validate_obstruction_witness(const Graph& g, const ObstructionWitness& w,
                                  int t);

// Maximum-cardinality-search chordality test.
bool is_chordal(const Graph& g);

// G[X] with compacted vertex ids; second element maps local id -> global.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                    const VertexSet& x);

} // namespace imtw

#endif
