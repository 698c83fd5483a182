#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "imtw/generators.hpp"
#include "imtw/graph.hpp"
#include "imtw/oracles.hpp"

using namespace imtw;

namespace {

bool is_cycle_graph(const Graph& g) {
    if (g.n() < 3 || g.m() != g.n()) return false;
    for (int v = 0; v < g.n(); ++v)
        if (g.neighbors(v).count() != 2) return false;
    // connected 2-regular graph with n edges is a single cycle
    Bitset seen(g.n());
    seen.set(0);
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        Bitset nb = g.neighbors(v);
        for (int u = nb.next(); u >= 0; u = nb.next(u + 1))
            if (!seen.test(u)) {
                seen.set(u);
                stack.push_back(u);
            }
    }
    return seen.count() == g.n();
}

} // namespace

TEST_CASE("basic families") {
    CHECK(gen_biclique(3, 3).m() == 9);
    CHECK(gen_path(2).m() == 1);
    CHECK(gen_cycle(4).m() == 4);
    CHECK_THROWS_AS(gen_cycle(2), invalid_argument_error);

    // C_4 and K_{2,2} are the same graph up to relabeling
    Graph c4 = gen_cycle(4);
    Graph k22 = gen_biclique(2, 2);
    CHECK(c4.n() == k22.n());
    CHECK(c4.m() == k22.m());
    CHECK(is_cycle_graph(k22));
}

TEST_CASE("subdivided bicliques") {
    Graph s21 = gen_subdivided_biclique(2, 1);
    CHECK(s21.n() == 8);
    CHECK(is_cycle_graph(s21)); // one subdivision of K_{2,2} is C_8

    Graph s11 = gen_subdivided_biclique(1, 1);
    CHECK(s11.n() == 3);
    CHECK(s11.m() == 2); // P_3

    Graph s22 = gen_subdivided_biclique(2, 2);
    CHECK(s22.n() == 12);
    CHECK(is_cycle_graph(s22)); // C_12
}

TEST_CASE("t-obstructions") {
    Graph ob2 = gen_t_obstruction(2, OptionalArcPolicy::None);
    CHECK(ob2.n() == 8);
    CHECK(ob2.m() == 8); // 2 + 2 + 4 mandatory edges

    // t=1, no optional arcs: the path a-b-c-d
    Graph ob1 = gen_t_obstruction(1, OptionalArcPolicy::None);
    CHECK(ob1.n() == 4);
    CHECK(ob1.m() == 3);
    CHECK(ob1.has_edge(0, 1));
    CHECK(ob1.has_edge(1, 2));
    CHECK(ob1.has_edge(2, 3));

    // the defining quadruple is always a valid witness
    for (int t = 1; t <= 2; ++t)
        for (auto pol : {OptionalArcPolicy::None, OptionalArcPolicy::Random,
                         OptionalArcPolicy::Full}) {
            Graph g = gen_t_obstruction(t, pol, 0.5, 99);
            ObstructionWitness w;
            std::vector<int> a, b, c, d;
            for (int i = 0; i < t; ++i) {
                a.push_back(i);
                b.push_back(t + i);
                c.push_back(2 * t + i);
                d.push_back(3 * t + i);
            }
            w.a = Bitset::of(4 * t, a);
            w.b = Bitset::of(4 * t, b);
            w.c = Bitset::of(4 * t, c);
            w.d = Bitset::of(4 * t, d);
            CHECK(validate_obstruction_witness(g, w, t));
        }

    // detector round-trip on the fully-arced instance
    Graph full = gen_t_obstruction(2, OptionalArcPolicy::Full);
    CHECK(find_t_obstruction(full, 2).has_value());
}

TEST_CASE("random families") {
    CHECK(gen_random_graph(6, 0.0, 1).m() == 0);
    CHECK(gen_random_graph(6, 1.0, 1).m() == 15);

    for (uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
        Graph g = gen_random_chordal(7, seed);
        CHECK(is_chordal(g));
        CHECK(tree_independence_number(g).value == 1);
    }
}

TEST_CASE("seed determinism") {
    for (uint64_t seed : {0ull, 17ull, 123456789ull}) {
        Graph a = gen_random_graph(9, 0.4, seed);
        Graph b = gen_random_graph(9, 0.4, seed);
        CHECK(a.edges() == b.edges());
        Graph c = gen_t_obstruction(3, OptionalArcPolicy::Random, 0.3, seed);
        Graph d = gen_t_obstruction(3, OptionalArcPolicy::Random, 0.3, seed);
        CHECK(c.edges() == d.edges());
        CHECK(gen_random_chordal(8, seed).edges() ==
              gen_random_chordal(8, seed).edges());
    }
    // pinned edge list so cross-platform drift would be caught
    Graph g = gen_random_graph(4, 0.5, 42);
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {2, 3}});
}

TEST_CASE("subdivided biclique yolov lower bound at s=2") {
    Graph s21 = gen_subdivided_biclique(2, 1);
    CHECK(induced_matching_treewidth(s21).value >= 2);
}
