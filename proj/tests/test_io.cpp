#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "imtw/generators.hpp"
#include "imtw/io.hpp"

using namespace imtw;

TEST_CASE("parse_gr") {
    Graph k2 = parse_gr("p tw 2 1\n1 2\n");
    CHECK(k2.n() == 2);
    CHECK(k2.has_edge(0, 1));

    Graph k1 = parse_gr("c x\np tw 1 0\n");
    CHECK(k1.n() == 1);
    CHECK(k1.m() == 0);

    CHECK_THROWS_AS(parse_gr("p tw 2 1\n1 3\n"), parse_error);
    CHECK_THROWS_AS(parse_gr("p foo 2 1\n"), parse_error);
    CHECK_THROWS_AS(parse_gr("1 2\n"), parse_error);
    CHECK_THROWS_AS(parse_gr("p tw 2 1\n1 1\n"), parse_error);

    std::vector<std::string> warnings;
    Graph dedup = parse_gr("p tw 2 2\n1 2\n2 1\n", &warnings);
    CHECK(dedup.m() == 1);
    // one warning for the duplicate, one for the header/edge-count mismatch
    REQUIRE(warnings.size() == 2);
    CHECK(warnings[0].find("duplicate") != std::string::npos);
}

TEST_CASE("gr round trip on a generated corpus") {
    std::mt19937_64 eng(71);
    for (int it = 0; it < 25; ++it) {
        int n = (int)rng_below(eng, 12);
        Graph g = gen_random_graph(n, rng_unit(eng), eng());
        Graph back = parse_gr(write_gr(g));
        CHECK(back.n() == g.n());
        CHECK(back.edges() == g.edges());
        CHECK(write_gr(back) == write_gr(g));
    }
}

TEST_CASE("parse_td") {
    int n = 0;
    TreeDecomposition t = parse_td("s td 1 3 3\nb 1 1 2 3\n", &n);
    CHECK(n == 3);
    CHECK(t.node_count == 1);
    CHECK(t.bags[0] == Bitset::of(3, {0, 1, 2}));

    TreeDecomposition two =
        parse_td("s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n", &n);
    CHECK(two.node_count == 2);
    CHECK(two.tree_edges == std::vector<std::pair<int, int>>{{0, 1}});

    CHECK_THROWS_AS(parse_td("s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 5\n"),
                    parse_error);
    CHECK_THROWS_AS(parse_td("b 1 1\n"), parse_error);
    CHECK_THROWS_AS(parse_td("s td 1 2 2\nb 1 9\n"), parse_error);
}

TEST_CASE("td round trip") {
    std::mt19937_64 eng(72);
    for (int it = 0; it < 20; ++it) {
        int n = 1 + (int)rng_below(eng, 9);
        Graph g = gen_random_graph(n, rng_unit(eng), eng());
        TreeDecomposition t = single_bag(g);
        int n2 = 0;
        TreeDecomposition back = parse_td(write_td(t, n), &n2);
        CHECK(n2 == n);
        CHECK(back == t);
        CHECK(write_td(back, n2) == write_td(t, n));
    }
}

TEST_CASE("manifest round trip") {
    RunManifest m;
    m.subcommand = "exact";
    m.input_paths = {"a.gr", "b.td"};
    m.parameters = {{"param", "treealpha"}, {"workers", "2"}};
    m.seed = 123456789012345ull;
    m.output_path = "out.json";
    m.caps = {{"n", 12}};
    RunManifest back = manifest_from_json(manifest_to_json(m));
    CHECK(back == m);
    CHECK(manifest_to_json(back) == manifest_to_json(m));

    CHECK_THROWS_AS(manifest_from_json("{not json"), parse_error);
    CHECK_THROWS_AS(manifest_from_json("{}"), parse_error);
}
