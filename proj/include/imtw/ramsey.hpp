#ifndef IMTW_RAMSEY_HPP
#define IMTW_RAMSEY_HPP

#include <map>
#include <optional>
#include <vector>

#include "imtw/bigcount.hpp"
#include "imtw/graph.hpp"

namespace imtw {

// Upper bound on the Ramsey number R(t_1,...,t_k). Two colors: the Pascal
// recursion R(a,b) <= R(a-1,b) + R(a,b-1) with R(1,.) = 1, R(2,k) = k,
// evaluated in closed form as binom(a+b-2, a-1). More colors: nest
// R(t_1, R(t_2,...,t_k)). A single target t yields t.
BigCount ramsey_upper(const std::vector<BigCount>& targets);
BigCount ramsey_upper_2(const BigCount& a, const BigCount& b);

// M(s,t) = R(2t, 2t, s+1): a bipartite graph with a matching that large
// contains an induced K_{t,t} or an induced matching of size s+1.
BigCount bound_M(unsigned long s, unsigned long t);

// N(s,t,m) = R(2t,...,2t, m*s) with binom(m,2) leading colors.
BigCount bound_N(const BigCount& s, unsigned long t, const BigCount& m);

// C(mu,t) = N(M(mu,t), t, M(mu,t)).
BigCount bound_C(unsigned long mu, unsigned long t);

// K(mu,t) = 2*M(mu,t) + mu*C(mu,t).
BigCount bound_K(unsigned long mu, unsigned long t);

// Chromatic bound f: f(0,.) = f(.,1) = 1 and otherwise
// f(mu,omega) = 2*(f(mu-1,omega) + (R(omega+1,omega+1,mu+1)-1)*f(mu,omega-1)).
BigCount bound_f(unsigned long mu, unsigned long omega);

// Total edge coloring of the complete graph on [n].
class CompleteEdgeColoring {
public:
    explicit CompleteEdgeColoring(int n, int fill_color = 0);

    int n() const { return n_; }
    int color(int i, int j) const;
    void set_color(int i, int j, int c);

private:
    int index(int i, int j) const;
    int n_;
    std::vector<int> colors_;
};

inline constexpr int kCliqueSearchCap = 16;

struct MonochromaticClique {
    int color = 0;
    std::vector<int> members;
};

// First clique (lexicographic on the sorted vertex sequence, ties broken by
// color id) whose size meets its color's target.
std::optional<MonochromaticClique> find_monochromatic_clique(
    const CompleteEdgeColoring& col, const std::map<int, int>& targets,
    int cap = kCliqueSearchCap);

enum class ExtractionMode { Faithful, Direct };

struct ExtractionOutcome {
    enum class Kind { InducedMatchingFound, BicliqueFound, Exhausted };
    Kind kind = Kind::Exhausted;
    Matching matching;
    BicliqueWitness biclique;
};

// Ramsey-style extraction from a bipartite graph with a matching: either an
// induced matching of size s+1 or an induced K_{t,t}. Faithful mode runs
// the three-color auxiliary-clique argument over the matching indices and
// can only see structures spanned by the matching; direct mode searches
// G[A u B] exhaustively. Exhausted is an ordinary outcome below the
// Ramsey-scale threshold.
ExtractionOutcome extract_im_or_biclique(const Graph& g, const VertexSet& a,
                                         const VertexSet& b,
                                         const Matching& m, int s, int t,
                                         ExtractionMode mode);

struct JointOutcome {
    enum class Kind { IndependentSetFound, BicliqueFound, Exhausted };
    Kind kind = Kind::Exhausted;
    VertexSet independent;
    BicliqueWitness biclique;
};

// From independent sets I_1..I_m, an independent set I with |I n I_i| >= s
// for all i; faithful mode runs the pair-colored auxiliary-clique argument
// (its contradiction branch surfaces as BicliqueFound), direct mode
// backtracks over per-set selections.
JointOutcome joint_independent_set(const Graph& g,
                                   const std::vector<VertexSet>& sets, int s,
                                   int t, ExtractionMode mode);

} // namespace imtw

#endif
