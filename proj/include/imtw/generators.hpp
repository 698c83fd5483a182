#ifndef IMTW_GENERATORS_HPP
#define IMTW_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>

#include "imtw/graph.hpp"

namespace imtw {

// All generators are deterministic functions of their arguments (and seed).
// Randomness goes through mt19937_64 with hand-rolled draws so outputs are
// identical across platforms and standard libraries.

Graph gen_biclique(int s, int t);
Graph gen_cycle(int n);
Graph gen_path(int n);

// K_{s,s} with every edge replaced by a path with k internal vertices.
// Sides are 0..s-1 and s..2s-1; internal vertices follow in lexicographic
// edge order, k consecutive ids per edge.
Graph gen_subdivided_biclique(int s, int k);

enum class OptionalArcPolicy { None, Random, Full };

// Four groups of t vertices A=0..t-1, B=t..2t-1, C=2t..3t-1, D=3t..4t-1.
// Mandatory: a_i b_i, c_i d_i (perfect matchings) and all b_i c_j (a
// biclique). Optional pairs between (A,C), (A,D) and (B,D) are included
// never / with probability p / always, per policy.
Graph gen_t_obstruction(int t, OptionalArcPolicy policy, double p = 0.5,
                        std::uint64_t seed = 0);

Graph gen_random_graph(int n, double p, std::uint64_t seed);

// Random chordal graph: G(n, 1/3) plus the fill-in of a uniformly random
// elimination ordering.
Graph gen_random_chordal(int n, std::uint64_t seed);

// Portable draws from a mt19937_64 engine.
double rng_unit(std::mt19937_64& eng);           // uniform in [0, 1)
std::uint64_t rng_below(std::mt19937_64& eng, std::uint64_t k);

} // namespace imtw

#endif
