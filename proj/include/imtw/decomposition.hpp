#ifndef IMTW_DECOMPOSITION_HPP
#define IMTW_DECOMPOSITION_HPP

#include <string>
#include <utility>
#include <vector>

#include "imtw/graph.hpp"

namespace imtw {

// Tree over nodes 0..node_count-1 with one bag (vertex set of the host
// graph) per node. Not trusted at construction; call validate explicitly.
struct TreeDecomposition {
    int node_count = 0;
    std::vector<std::pair<int, int>> tree_edges;
    std::vector<Bitset> bags;
};

bool operator==(const TreeDecomposition& a, const TreeDecomposition& b);

struct EliminationOrdering {
    std::vector<int> order;
};

// Which decomposition axiom failed, with the offending object.
struct AxiomViolation {
    int axiom = 0;        // 1: vertex uncovered, 2: edge uncovered,
                          // 3: disconnected vertex subtree, 0: not a tree
    int vertex = -1;
    Edge edge{-1, -1};
    std::string message;
};

struct ValidationResult {
    bool ok = true;
    AxiomViolation violation;
};

// Checks the tree structure and the three decomposition axioms of T with
// respect to G[X]; bags are intersected with X implicitly when checking.
ValidationResult validate_on(const Graph& g, const VertexSet& x,
                             const TreeDecomposition& t);
ValidationResult validate(const Graph& g, const TreeDecomposition& t);

// Nodes x with v in bag(x), as a bitset over nodes. Throws if v is in no bag.
Bitset vertex_subtree(const TreeDecomposition& t, int v);

// alpha(T) = max over bags of the independence number of the bag.
int alpha_of(const Graph& g, const TreeDecomposition& t);

// mu(T) = max over bags of the largest induced matching touching the bag.
int mu_of(const Graph& g, const TreeDecomposition& t,
          int cap = kDefaultSearchCap);

// Decomposition of G[X] over the given node subtree with bags cut to X.
// Node ids are compacted in ascending order of the original ids.
TreeDecomposition restrict(const Graph& g, const TreeDecomposition& t,
                           const Bitset& nodes, const VertexSet& x);

// Standard fill-in construction: bag of v is {v} plus its later neighbors
// in the fill graph of ord; each node attaches to the node of its earliest
// later fill-neighbor.
TreeDecomposition from_elimination_ordering(const Graph& g,
                                            const EliminationOrdering& ord);

TreeDecomposition single_bag(const Graph& g);

} // namespace imtw

#endif
