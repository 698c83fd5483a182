#include "imtw/ramsey.hpp"

#include <algorithm>
#include <functional>

namespace imtw {

namespace {

// binom(n, k) with saturation; k is clamped to min(k, n-k) by the callers'
// usage (k = min(a,b)-1 <= n-k).
BigCount binomial(const BigCount& n, const BigCount& k) {
    if (n.is_saturated()) return BigCount::saturated();
    if (k.is_zero()) return BigCount(1ul);
    // binom(n,k) >= 2^k once n >= 2k, so a k beyond the bit budget is
    // already saturated.
    if (!k.fits_ulong() || k.to_ulong() > BigCount::kMaxBits)
        return BigCount::saturated();
    unsigned long kk = k.to_ulong();
    mpz_class result = 1;
    mpz_class nv = n.value();
    for (unsigned long i = 1; i <= kk; ++i) {
        result *= nv - (long)(kk - i);
        result /= (unsigned long)i;
        if (mpz_sizeinbase(result.get_mpz_t(), 2) > BigCount::kMaxBits)
            return BigCount::saturated();
    }
    if (sgn(result) < 0) return BigCount(0ul); // n < k
    return BigCount(result);
}

} // namespace

BigCount ramsey_upper_2(const BigCount& a, const BigCount& b) {
    if (a.is_zero() || b.is_zero())
        throw invalid_argument_error("ramsey_upper: target < 1");
    if (a == BigCount(1ul) || b == BigCount(1ul)) return BigCount(1ul);
    if (a == BigCount(2ul)) return b;
    if (b == BigCount(2ul)) return a;
    if (a.is_saturated() || b.is_saturated()) return BigCount::saturated();
    BigCount lesser = a < b ? a : b;
    return binomial(a + b - BigCount(2ul), lesser - BigCount(1ul));
}

BigCount ramsey_upper(const std::vector<BigCount>& targets) {
    if (targets.empty())
        throw invalid_argument_error("ramsey_upper: empty target list");
    for (const auto& t : targets)
        if (t.is_zero())
            throw invalid_argument_error("ramsey_upper: target < 1");
    BigCount acc = targets.back();
    for (auto it = targets.rbegin() + 1; it != targets.rend(); ++it)
        acc = ramsey_upper_2(*it, acc);
    return acc;
}

BigCount bound_M(unsigned long s, unsigned long t) {
    if (s < 1 || t < 1) throw invalid_argument_error("bound_M: argument < 1");
    return ramsey_upper({BigCount(2 * t), BigCount(2 * t), BigCount(s + 1)});
}

BigCount bound_N(const BigCount& s, unsigned long t, const BigCount& m) {
    if (s.is_zero() || t < 1 || m.is_zero())
        throw invalid_argument_error("bound_N: argument < 1");
    BigCount acc = m * s;
    if (2 * t == 2) return acc; // R(2, x) = x at every nesting level
    BigCount two_t(2 * t);
    // binom(m,2) nesting levels; the iteration either saturates, reaches a
    // fixed point, or the level count runs out.
    BigCount levels;
    if (m.is_saturated())
        levels = BigCount::saturated();
    else
        levels = BigCount(mpz_class(m.value() * (m.value() - 1) / 2));
    while (!levels.is_zero()) {
        BigCount next = ramsey_upper_2(two_t, acc);
        if (next == acc) break;
        acc = next;
        if (acc.is_saturated()) break;
        if (!levels.is_saturated()) levels = levels - BigCount(1ul);
    }
    return acc;
}

BigCount bound_C(unsigned long mu, unsigned long t) {
    if (mu < 1 || t < 1) throw invalid_argument_error("bound_C: argument < 1");
    BigCount m = bound_M(mu, t);
    return bound_N(m, t, m);
}

BigCount bound_K(unsigned long mu, unsigned long t) {
    if (mu < 1 || t < 1) throw invalid_argument_error("bound_K: argument < 1");
    return BigCount(2ul) * bound_M(mu, t) + BigCount(mu) * bound_C(mu, t);
}

BigCount bound_f(unsigned long mu, unsigned long omega) {
    if (omega < 1) throw invalid_argument_error("bound_f: omega < 1");
    static std::map<std::pair<unsigned long, unsigned long>, BigCount> memo;
    if (mu == 0 || omega == 1) return BigCount(1ul);
    auto key = std::make_pair(mu, omega);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    BigCount r = ramsey_upper({BigCount(omega + 1), BigCount(omega + 1),
                               BigCount(mu + 1)});
    BigCount value = BigCount(2ul) * (bound_f(mu - 1, omega) +
                                      (r - BigCount(1ul)) *
                                          bound_f(mu, omega - 1));
    memo.emplace(key, value);
    return value;
}

CompleteEdgeColoring::CompleteEdgeColoring(int n, int fill_color)
    : n_(n), colors_((size_t)n * (n - 1) / 2, fill_color) {
    if (n < 0) throw invalid_argument_error("edge coloring: negative n");
}

int CompleteEdgeColoring::index(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n_ || i == j)
        throw invalid_argument_error("edge coloring: bad pair");
    return (int)((size_t)j * (j - 1) / 2 + i);
}

int CompleteEdgeColoring::color(int i, int j) const {
    return colors_[index(i, j)];
}

void CompleteEdgeColoring::set_color(int i, int j, int c) {
    colors_[index(i, j)] = c;
}

namespace {

// Lexicographically first k-clique in the given color, or nullopt.
std::optional<std::vector<int>> first_clique(const CompleteEdgeColoring& col,
                                             int c, int k) {
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int from) -> bool {
        if ((int)chosen.size() == k) return true;
        for (int v = from; v < col.n(); ++v) {
            if (col.n() - v < k - (int)chosen.size()) break;
            bool ok = true;
            for (int u : chosen)
                if (col.color(u, v) != c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(v);
            if (self(self, v + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (rec(rec, 0)) return chosen;
    return std::nullopt;
}

} // namespace

std::optional<MonochromaticClique> find_monochromatic_clique(
    const CompleteEdgeColoring& col, const std::map<int, int>& targets,
    int cap) {
    if (col.n() > cap)
        throw cap_exceeded_error("find_monochromatic_clique", col.n(), cap);
    std::optional<MonochromaticClique> best;
    for (const auto& [color, size] : targets) {
        if (size < 1)
            throw invalid_argument_error("find_monochromatic_clique: size < 1");
        auto clique = first_clique(col, color, size);
        if (!clique) continue;
        if (!best || *clique < best->members ||
            (*clique == best->members && color < best->color))
            best = MonochromaticClique{color, *clique};
    }
    return best;
}

namespace {

void check_bipartite_with_matching(const Graph& g, const VertexSet& a,
                                   const VertexSet& b, const Matching& m) {
    if (a.intersects(b))
        throw invalid_argument_error("extract: sides overlap");
    for (int v = a.next(); v >= 0; v = a.next(v + 1))
        if (g.neighbors(v).intersects(a))
            throw invalid_argument_error("extract: edge inside side A");
    for (int v = b.next(); v >= 0; v = b.next(v + 1))
        if (g.neighbors(v).intersects(b))
            throw invalid_argument_error("extract: edge inside side B");
    Bitset used(g.n());
    for (auto [u, v] : m.edges) {
        if (!a.test(u) || !b.test(v))
            throw invalid_argument_error(
                "extract: matching edge not from A to B");
        if (!g.has_edge(u, v))
            throw invalid_argument_error("extract: matching pair is not an edge");
        if (used.test(u) || used.test(v))
            throw invalid_argument_error("extract: matching reuses a vertex");
        used.set(u);
        used.set(v);
    }
}

ExtractionOutcome direct_extract(const Graph& g, const VertexSet& a,
                                 const VertexSet& b, int s, int t) {
    VertexSet both = a | b;
    auto [sub, to_global] = induced_subgraph(g, both);
    auto [size, matching] =
        max_induced_matching_touching(sub, sub.vertices(), sub.n());
    ExtractionOutcome out;
    if (size >= s + 1) {
        out.kind = ExtractionOutcome::Kind::InducedMatchingFound;
        for (int i = 0; i < s + 1; ++i) {
            auto [u, v] = matching.edges[i];
            out.matching.edges.emplace_back(to_global[u], to_global[v]);
        }
        return out;
    }
    auto biclique = find_induced_biclique(sub, t, sub.n());
    if (biclique) {
        out.kind = ExtractionOutcome::Kind::BicliqueFound;
        out.biclique.side_a = Bitset(g.n());
        out.biclique.side_b = Bitset(g.n());
        for (int v : biclique->side_a.to_vector())
            out.biclique.side_a.set(to_global[v]);
        for (int v : biclique->side_b.to_vector())
            out.biclique.side_b.set(to_global[v]);
        return out;
    }
    return out;
}

} // namespace

ExtractionOutcome extract_im_or_biclique(const Graph& g, const VertexSet& a,
                                         const VertexSet& b,
                                         const Matching& m, int s, int t,
                                         ExtractionMode mode) {
    if (s < 1 || t < 1)
        throw invalid_argument_error("extract: s and t must be >= 1");
    check_bipartite_with_matching(g, a, b, m);
    if (mode == ExtractionMode::Direct) return direct_extract(g, a, b, s, t);

    // Auxiliary three-coloring over the matching indices: color 1 when the
    // forward cross pair a_i b_j is an edge, color 2 when only the backward
    // pair a_j b_i is, color 3 when neither.
    int n = m.size();
    std::vector<Edge> edges = m.edges;
    std::sort(edges.begin(), edges.end());
    CompleteEdgeColoring col(n, 3);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (g.has_edge(edges[i].first, edges[j].second))
                col.set_color(i, j, 1);
            else if (g.has_edge(edges[j].first, edges[i].second))
                col.set_color(i, j, 2);
        }
    auto clique = find_monochromatic_clique(col, {{1, 2 * t}, {2, 2 * t},
                                                  {3, s + 1}});
    ExtractionOutcome out;
    if (!clique) return out;
    const auto& idx = clique->members; // ascending
    if (clique->color == 3) {
        out.kind = ExtractionOutcome::Kind::InducedMatchingFound;
        for (int i : idx) out.matching.edges.push_back(edges[i]);
        if (!is_induced_matching(g, out.matching))
            throw invalid_argument_error(
                "extract: faithful matching failed validation");
        return out;
    }
    out.kind = ExtractionOutcome::Kind::BicliqueFound;
    out.biclique.side_a = Bitset(g.n());
    out.biclique.side_b = Bitset(g.n());
    if (clique->color == 1) {
        // first t indices give the A-side, last t the B-side
        for (int k = 0; k < t; ++k) out.biclique.side_a.set(edges[idx[k]].first);
        for (int k = t; k < 2 * t; ++k)
            out.biclique.side_b.set(edges[idx[k]].second);
    } else {
        // color 2: first t indices give the B-side, last t the A-side
        for (int k = 0; k < t; ++k) out.biclique.side_b.set(edges[idx[k]].second);
        for (int k = t; k < 2 * t; ++k)
            out.biclique.side_a.set(edges[idx[k]].first);
    }
    if (!validate_biclique_witness(g, out.biclique, t))
        throw invalid_argument_error(
            "extract: faithful biclique failed validation");
    return out;
}

namespace {

JointOutcome direct_joint(const Graph& g, const std::vector<VertexSet>& sets,
                          int s) {
    JointOutcome out;
    int m = (int)sets.size();
    std::vector<std::vector<int>> pool(m);
    for (int i = 0; i < m; ++i) {
        pool[i] = sets[i].to_vector();
        if ((int)pool[i].size() < s) return out; // Exhausted
    }
    Bitset chosen(g.n());
    auto rec = [&](auto&& self, int set_idx, int got, size_t from) -> bool {
        if (got == s)
            return set_idx + 1 == m ? true : self(self, set_idx + 1, 0, 0);
        for (size_t i = from; i < pool[set_idx].size(); ++i) {
            if (pool[set_idx].size() - i < (size_t)(s - got)) break;
            int v = pool[set_idx][i];
            if (chosen.test(v)) {
                // already picked for an earlier set; counts here too
                if (self(self, set_idx, got + 1, i + 1)) return true;
                continue;
            }
            if (g.neighbors(v).intersects(chosen)) continue;
            chosen.set(v);
            if (self(self, set_idx, got + 1, i + 1)) return true;
            chosen.reset(v);
        }
        return false;
    };
    if (rec(rec, 0, 0, 0)) {
        out.kind = JointOutcome::Kind::IndependentSetFound;
        out.independent = chosen;
    }
    return out;
}

} // namespace

JointOutcome joint_independent_set(const Graph& g,
                                   const std::vector<VertexSet>& sets, int s,
                                   int t, ExtractionMode mode) {
    if (sets.empty())
        throw invalid_argument_error("joint_independent_set: no sets");
    if (s < 1 || t < 1)
        throw invalid_argument_error("joint_independent_set: s,t must be >= 1");
    for (const auto& iset : sets)
        if (!is_independent_set(g, iset))
            throw invalid_argument_error(
                "joint_independent_set: input set not independent");
    if (mode == ExtractionMode::Direct) return direct_joint(g, sets, s);

    int m = (int)sets.size();
    std::vector<std::vector<int>> v(m);
    int nn = g.n();
    for (int i = 0; i < m; ++i) {
        v[i] = sets[i].to_vector();
        nn = std::min(nn, (int)v[i].size());
    }
    JointOutcome out;
    if (nn == 0) return out;
    // Colors: pair (i,j), i<j, enumerated in lex order; special color last.
    auto pair_color = [m](int i, int j) { return i * m + j; };
    int special = m * m;
    CompleteEdgeColoring col(nn, special);
    for (int k = 0; k < nn; ++k)
        for (int l = k + 1; l < nn; ++l) {
            for (int i = 0; i < m; ++i) {
                bool done = false;
                for (int j = i + 1; j < m; ++j)
                    if (g.has_edge(v[i][k], v[j][l])) {
                        col.set_color(k, l, pair_color(i, j));
                        done = true;
                        break;
                    }
                if (done) break;
            }
        }
    std::map<int, int> targets;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) targets[pair_color(i, j)] = 2 * t;
    targets[special] = m * s;
    auto clique = find_monochromatic_clique(col, targets, nn);
    if (!clique) return out;
    if (clique->color != special) {
        int i = clique->color / m, j = clique->color % m;
        out.kind = JointOutcome::Kind::BicliqueFound;
        out.biclique.side_a = Bitset(g.n());
        out.biclique.side_b = Bitset(g.n());
        for (int k = 0; k < t; ++k)
            out.biclique.side_a.set(v[i][clique->members[k]]);
        for (int k = t; k < 2 * t; ++k)
            out.biclique.side_b.set(v[j][clique->members[k]]);
        if (!validate_biclique_witness(g, out.biclique, t))
            throw invalid_argument_error(
                "joint_independent_set: faithful biclique failed validation");
        return out;
    }
    out.kind = JointOutcome::Kind::IndependentSetFound;
    out.independent = Bitset(g.n());
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < s; ++k)
            out.independent.set(v[i][clique->members[i * s + k]]);
    if (!is_independent_set(g, out.independent))
        throw invalid_argument_error(
            "joint_independent_set: sliced set failed validation");
    return out;
}

} // namespace imtw
