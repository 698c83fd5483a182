#include "imtw/transform.hpp"

#include <algorithm>

#include "imtw/oracles.hpp"

namespace imtw {

LightHeavySplit classify_light_heavy(const Graph& g, const VertexSet& s,
                                     const BigCount& threshold) {
    if (!is_independent_set(g, s))
        throw invalid_argument_error("classify_light_heavy: S not independent");
    LightHeavySplit split{s, threshold, Bitset(g.n()), Bitset(g.n())};
    for (int v = s.next(); v >= 0; v = s.next(v + 1)) {
        BigCount alpha_nbhd(
            (unsigned long)independence_number(g, g.neighbors(v)));
        if (alpha_nbhd < threshold)
            split.s_light.set(v);
        else
            split.s_heavy.set(v);
    }
    return split;
}

TreeDecomposition build_tprime(const Graph& g, const TreeDecomposition& t,
                               const VertexSet& s, const VertexSet& s_light) {
    if (!s_light.is_subset_of(s))
        throw invalid_argument_error("build_tprime: S_light not within S");
    if (!is_independent_set(g, s))
        throw invalid_argument_error("build_tprime: S not independent");
    TreeDecomposition out;
    out.node_count = t.node_count;
    out.tree_edges = t.tree_edges;
    out.bags.reserve(t.node_count + s_light.count());
    for (int node = 0; node < t.node_count; ++node) {
        Bitset light_here = t.bags[node] & s_light;
        Bitset bag = t.bags[node] - s_light;
        bag |= neighborhood(g, light_here, /*closed=*/false);
        out.bags.push_back(bag);
    }
    for (int v = s_light.next(); v >= 0; v = s_light.next(v + 1)) {
        int attach = vertex_subtree(t, v).next(); // lowest node of T_v
        int leaf = out.node_count++;
        out.tree_edges.emplace_back(attach, leaf);
        out.bags.push_back(neighborhood(g, Bitset::of(g.n(), {v}),
                                        /*closed=*/true));
    }
    auto res = validate(g, out);
    if (!res.ok)
        throw invalid_argument_error("build_tprime: output invalid: " +
                                     res.violation.message);
    return out;
}

TransformReport check_claims(const Graph& g, const TreeDecomposition& t,
                             const LightHeavySplit& split, unsigned long mu,
                             const BigCount& m_bound,
                             const BigCount& c_bound) {
    TransformReport report;
    BigCount mu_c = BigCount(mu) * c_bound;
    for (int node = 0; node < t.node_count; ++node) {
        PerBagMeasurement row;
        row.node = node;
        row.alpha_outside_s =
            independence_number(g, t.bags[node] - split.s);
        Bitset light_here = t.bags[node] & split.s_light;
        row.alpha_light_nbhd = independence_number(
            g, neighborhood(g, light_here, /*closed=*/false));
        row.heavy_in_bag = (t.bags[node] & split.s_heavy).count();
        if (!(BigCount((unsigned long)row.alpha_outside_s) < m_bound))
            report.claim_outside_holds = false;
        if (!(BigCount((unsigned long)row.alpha_light_nbhd) < mu_c))
            report.claim_light_holds = false;
        if (!(BigCount((unsigned long)row.heavy_in_bag) < m_bound))
            report.claim_heavy_holds = false;
        report.per_bag.push_back(row);
    }
    return report;
}

std::optional<WitnessReport> refutation_witness(const Graph& g,
                                                const TreeDecomposition& t,
                                                int node, const VertexSet& s,
                                                int mu, int t_param,
                                                ExtractionMode mode) {
    if (node < 0 || node >= t.node_count)
        throw invalid_argument_error("refutation_witness: bad node");
    VertexSet outside = t.bags[node] - s;
    VertexSet iset = max_independent_set_in(g, outside);
    if (iset.none()) return std::nullopt;
    Matching matching = max_bipartite_matching(g, s, iset);
    if (matching.size() != iset.count())
        throw invalid_argument_error(
            "refutation_witness: Koenig matching smaller than |I|; "
            "S is not a maximum independent set");
    ExtractionOutcome outcome =
        extract_im_or_biclique(g, s, iset, matching, mu, t_param, mode);
    if (outcome.kind == ExtractionOutcome::Kind::InducedMatchingFound) {
        WitnessReport w;
        w.kind = WitnessReport::Kind::InducedMatching;
        w.matching = outcome.matching;
        w.node = node;
        w.message = "induced matching of size " + std::to_string(mu + 1) +
                    " touching bag " + std::to_string(node) +
                    "; refutes mu(T) <= " + std::to_string(mu);
        return w;
    }
    if (outcome.kind == ExtractionOutcome::Kind::BicliqueFound) {
        WitnessReport w;
        w.kind = WitnessReport::Kind::Biclique;
        w.biclique = outcome.biclique;
        w.node = node;
        w.message = "induced K_{" + std::to_string(t_param) + "," +
                    std::to_string(t_param) +
                    "}; refutes K_{t,t}-freeness";
        return w;
    }
    return std::nullopt;
}

std::pair<TreeDecomposition, TransformReport> theorem3_pipeline(
    const Graph& g, const TreeDecomposition& t, unsigned long mu,
    unsigned long t_param, std::optional<unsigned long> threshold_override) {
    auto res = validate(g, t);
    if (!res.ok)
        throw invalid_argument_error("theorem3_pipeline: invalid input: " +
                                     res.violation.message);
    VertexSet s = max_independent_set(g);
    BigCount threshold = threshold_override
                             ? BigCount(*threshold_override)
                             : bound_C(mu, t_param);
    LightHeavySplit split = classify_light_heavy(g, s, threshold);
    TreeDecomposition tprime = build_tprime(g, t, s, split.s_light);
    TransformReport report = check_claims(g, t, split, mu, bound_M(mu, t_param),
                                          bound_C(mu, t_param));
    report.alpha_tprime = alpha_of(g, tprime);
    report.bound_k = bound_K(mu, t_param);
    report.precondition_ktt_free =
        !find_induced_biclique(g, (int)t_param, g.n()).has_value();
    report.precondition_mu_ok =
        !verify_mu_at_most(g, t, (int)mu, g.n()).has_value();
    report.guarantee_claimed =
        report.precondition_ktt_free && report.precondition_mu_ok;
    return {tprime, report};
}

} // namespace imtw
