#ifndef IMTW_ORACLES_HPP
#define IMTW_ORACLES_HPP

#include <cstdint>
#include <optional>

#include "imtw/decomposition.hpp"
#include "imtw/graph.hpp"
#include "imtw/witness.hpp"

namespace imtw {

struct OracleConfig {
    int max_n = 9;
    int worker_count = 1;
    bool symmetry_pruning = false;
};

struct OracleResult {
    int value = 0;
    TreeDecomposition witness;
    uint64_t explored_orderings = 0;
};

// Exact tree-independence number by exhaustive minimization of alpha(T)
// over all elimination-ordering decompositions.
//
// Why orderings suffice: any decomposition induces a triangulation
// (complete every bag); a minimal triangulation beneath it has every
// maximal clique inside some bag, and both alpha and mu only shrink when
// bags shrink; every minimal triangulation is the fill-in of some
// elimination ordering, so the minimum over orderings equals the minimum
// over all decompositions.
OracleResult tree_independence_number(const Graph& g,
                                      const OracleConfig& cfg = {});

// Exact induced matching treewidth, same minimization with mu(T).
OracleResult induced_matching_treewidth(const Graph& g,
                                        const OracleConfig& cfg = {});

// ok (nullopt) iff mu(T) <= mu; otherwise a touching induced matching of
// size mu+1 at some bag.
std::optional<WitnessReport> verify_mu_at_most(const Graph& g,
                                               const TreeDecomposition& t,
                                               int mu,
                                               int cap = kDefaultSearchCap);

} // namespace imtw

#endif
