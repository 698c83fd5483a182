#ifndef IMTW_COLORING_HPP
#define IMTW_COLORING_HPP

#include <memory>
#include <string>
#include <vector>

#include "imtw/decomposition.hpp"
#include "imtw/graph.hpp"

namespace imtw {

// Ordered partition L_0..L_t with edges only inside a layer or between
// consecutive layers.
struct Layering {
    std::vector<VertexSet> layers;
};

// Total color assignment; -1 marks vertices outside the colored domain.
struct Coloring {
    std::vector<int> assignment;
    int color_count = 0;
};

// Raised when a recursive call reaches mu = 0 or omega = 1 on a subgraph
// that still has an edge: certifies that the trusted input parameters were
// wrong (mu(T) > mu or omega(G) > omega).
class base_case_violation : public std::runtime_error {
public:
    base_case_violation(Edge e, int mu, int omega)
        : std::runtime_error("base case (mu=" + std::to_string(mu) +
                             ", omega=" + std::to_string(omega) +
                             ") reached with edge (" +
                             std::to_string(e.first) + "," +
                             std::to_string(e.second) + ") present"),
          edge(e), mu(mu), omega(omega) {}
    Edge edge;
    int mu;
    int omega;
};

struct RecursionTrace {
    std::string kind; // component, L1-u, L1-v, A, B-dominator, ...
    int mu = 0;
    int omega = 0;
    int subgraph_size = 0;
    int colors_used = 0;
    std::vector<RecursionTrace> children;
};

// BFS layering seeded by an edge: L_0 = {u0, v0}, then neighborhoods of the
// growing prefix. Requires u0v0 in E(G) and G connected.
Layering bfs_layering(const Graph& g, int u0, int v0);

bool is_proper_on(const Graph& g, const VertexSet& x,
                  const std::vector<int>& assignment);

// phi(v) = (layer color, layer parity), flattened as 2*color + parity.
Coloring combine(const Graph& g, const Layering& layering,
                 const std::vector<Coloring>& per_layer);

struct SplitAB {
    VertexSet a;
    VertexSet b;
    Bitset prime_nodes;
};

// A = vertices of L_i whose decomposition subtree meets the subtree spanned
// by layers 0..i-2; B is the rest of L_i.
SplitAB split_AB(const Graph& g, const TreeDecomposition& t,
                 const Layering& layering, int i);

// Inclusion-minimal D within pool with C contained in N(D), by greedy
// removal of redundant vertices (ties keep the lowest indices). Minimality
// leaves each d a private neighbor v_d in C with N(v_d) n D = {d}.
VertexSet minimal_dominator(const Graph& g, const VertexSet& c,
                            const VertexSet& pool);

// Proper coloring with at most bound_f(mu, omega) colors, following the
// layered recursion; mu(T) <= mu and omega(G) <= omega are trusted, and a
// lie is detected as base_case_violation. Properness is unconditional.
std::pair<Coloring, RecursionTrace> color_with_bound(const Graph& g,
                                                     const TreeDecomposition& t,
                                                     int mu, int omega);

} // namespace imtw

#endif
