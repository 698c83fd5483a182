#ifndef IMTW_TRANSFORM_HPP
#define IMTW_TRANSFORM_HPP

#include <optional>
#include <vector>

#include "imtw/bigcount.hpp"
#include "imtw/decomposition.hpp"
#include "imtw/graph.hpp"
#include "imtw/ramsey.hpp"
#include "imtw/witness.hpp"

namespace imtw {

// Split of an independent set into light vertices (alpha(N(v)) below the
// threshold) and heavy ones.
struct LightHeavySplit {
    VertexSet s;
    BigCount light_threshold;
    VertexSet s_light;
    VertexSet s_heavy;
};

struct PerBagMeasurement {
    int node = 0;
    int alpha_outside_s = 0;  // alpha(bag \ S)
    int alpha_light_nbhd = 0; // alpha(N(bag n S_light))
    int heavy_in_bag = 0;     // |bag n S_heavy|
};

struct TransformReport {
    int alpha_tprime = -1;
    BigCount bound_k;
    std::vector<PerBagMeasurement> per_bag;
    bool claim_outside_holds = true; // alpha(bag \ S) < M bound, every bag
    bool claim_light_holds = true;   // alpha(N(bag n S_l)) < mu*C, every bag
    bool claim_heavy_holds = true;   // |bag n S_h| < M bound, every bag
    bool precondition_ktt_free = false;
    bool precondition_mu_ok = false;
    bool guarantee_claimed = false;
};

LightHeavySplit classify_light_heavy(const Graph& g, const VertexSet& s,
                                     const BigCount& threshold);

// The bag-rewriting + leaf-grafting construction: every original bag loses
// S_light and gains the neighborhood of its light part; each light vertex
// gets a fresh leaf bag N[s] attached to the lowest-index node of its
// subtree. Valid for any independent S and any S_light subset of S; the
// result is validated before return.
TreeDecomposition build_tprime(const Graph& g, const TreeDecomposition& t,
                               const VertexSet& s, const VertexSet& s_light);

TransformReport check_claims(const Graph& g, const TreeDecomposition& t,
                             const LightHeavySplit& split, unsigned long mu,
                             const BigCount& m_bound, const BigCount& c_bound);

// Runs the claim-proof engine at one bag: Koenig matching between S and a
// maximum independent set of bag \ S, then Ramsey extraction. A resulting
// induced matching of size mu+1 refutes mu(T) <= mu; a biclique refutes
// K_{t,t}-freeness; Exhausted yields nullopt.
std::optional<WitnessReport> refutation_witness(
    const Graph& g, const TreeDecomposition& t, int node, const VertexSet& s,
    int mu, int t_param, ExtractionMode mode = ExtractionMode::Direct);

// End-to-end pipeline: choose S, classify with the supplied threshold
// (default: the full C bound, which saturates and makes every vertex light),
// build T', measure. Preconditions are verified and reported, not enforced.
std::pair<TreeDecomposition, TransformReport> theorem3_pipeline(
    const Graph& g, const TreeDecomposition& t, unsigned long mu,
    unsigned long t_param,
    std::optional<unsigned long> threshold_override = std::nullopt);

} // namespace imtw

#endif
