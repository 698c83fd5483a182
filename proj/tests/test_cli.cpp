#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

#include "imtw/io.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(IMTW_CLI_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

fs::path tmp_dir() {
    fs::path d = fs::temp_directory_path() / "imtw_cli_test";
    fs::create_directories(d);
    return d;
}

void put(const fs::path& p, const std::string& content) {
    std::ofstream f(p);
    f << content;
}

} // namespace

TEST_CASE("exit codes: 0 success, 1 contract failure, 2 usage") {
    fs::path d = tmp_dir();
    put(d / "k2.gr", "p tw 2 1\n1 2\n");
    put(d / "k2.td", "s td 1 2 2\nb 1 1 2\n");
    put(d / "bad.td", "s td 2 1 2\nb 1 1\nb 2 2\n1 2\n"); // edge 1-2 uncovered

    CHECK(run("validate " + (d / "k2.gr").string() + " " +
              (d / "k2.td").string())
              .exit_code == 0);

    auto bad = run("validate " + (d / "k2.gr").string() + " " +
                   (d / "bad.td").string());
    CHECK(bad.exit_code == 1);
    json j = json::parse(bad.out);
    CHECK(j["ok"] == false);
    CHECK(j["violation"]["axiom"] == 2);

    CHECK(run("no-such-subcommand").exit_code == 2);
    CHECK(run("validate only-one-arg").exit_code == 2);
}

TEST_CASE("axiom-3 violation names the vertex") {
    fs::path d = tmp_dir();
    put(d / "e3.gr", "p tw 3 0\n");
    put(d / "e3.td", "s td 3 2 3\nb 1 1 2\nb 2 3\nb 3 1 2\n1 2\n2 3\n");
    auto res = run("validate " + (d / "e3.gr").string() + " " +
                   (d / "e3.td").string());
    CHECK(res.exit_code == 1);
    json j = json::parse(res.out);
    CHECK(j["violation"]["axiom"] == 3);
    CHECK(j["violation"]["vertex"] == 1);
}

TEST_CASE("schemaVersion everywhere, params and exact values") {
    fs::path d = tmp_dir();
    auto gen = run("gen biclique --a 3 --b 3 -o " + (d / "k33.gr").string());
    CHECK(gen.exit_code == 0);

    put(d / "k33.td", "s td 1 6 6\nb 1 1 2 3 4 5 6\n");
    auto params = run("params " + (d / "k33.gr").string() + " " +
                      (d / "k33.td").string());
    json jp = json::parse(params.out);
    CHECK(jp["schemaVersion"] == imtw::kSchemaVersion);
    CHECK(jp["alpha"] == 3);
    CHECK(jp["mu"] == 1);

    auto exact = run("exact " + (d / "k33.gr").string() + " --param treealpha");
    json je = json::parse(exact.out);
    CHECK(je["value"] == 3);
    CHECK(je.contains("witnessTd"));

    auto bounds = run("bounds --f 0,7");
    json jb = json::parse(bounds.out);
    CHECK(jb["f"] == "1");
    CHECK(jb["schemaVersion"] == imtw::kSchemaVersion);
}

TEST_CASE("gen/parse round trip through files") {
    fs::path d = tmp_dir();
    for (std::string spec : {"cycle --n 8", "path --n 5",
                             "subdivided-biclique --s 2 --k 1",
                             "t-obstruction --t 2 --policy full --seed 3",
                             "random --n 9 --p 0.4 --seed 11",
                             "chordal --n 8 --seed 5"}) {
        fs::path p = d / "rt.gr";
        CHECK(run("gen " + spec + " -o " + p.string()).exit_code == 0);
        std::string text = imtw::read_file(p.string());
        CHECK(imtw::write_gr(imtw::parse_gr(text)) == text);
    }
}

TEST_CASE("golden outputs byte-stable across runs") {
    fs::path d = tmp_dir();
    put(d / "c5.gr", "p tw 5 5\n1 2\n1 5\n2 3\n3 4\n4 5\n");
    put(d / "c5.td", "s td 1 5 5\nb 1 1 2 3 4 5\n");
    std::vector<std::string> cmds = {
        "params " + (d / "c5.gr").string() + " " + (d / "c5.td").string(),
        "exact " + (d / "c5.gr").string() + " --param yolov",
        "color " + (d / "c5.gr").string() + " " + (d / "c5.td").string() +
            " --mu 1 --omega 2",
        "transform " + (d / "c5.gr").string() + " " + (d / "c5.td").string() +
            " --mu 1 --t 2",
        "layering " + (d / "c5.gr").string() + " --edge 1,2",
        std::string("bounds --M 2,2 --K 2,2 --f 1,2")};
    for (const std::string& cmd : cmds) {
        auto first = run(cmd);
        auto second = run(cmd);
        CHECK(first.exit_code == 0);
        CHECK(first.out == second.out);
        CHECK(!first.out.empty());
    }
}

TEST_CASE("manifest file round trips") {
    fs::path d = tmp_dir();
    put(d / "k2.gr", "p tw 2 1\n1 2\n");
    fs::path mpath = d / "manifest.json";
    auto res = run("--manifest " + mpath.string() + " exact " +
                   (d / "k2.gr").string() + " --param treealpha");
    CHECK(res.exit_code == 0);
    imtw::RunManifest m =
        imtw::manifest_from_json(imtw::read_file(mpath.string()));
    CHECK(m.subcommand == "exact");
    CHECK(imtw::manifest_from_json(imtw::manifest_to_json(m)) == m);
}

TEST_CASE("caps flag reaches the oracle") {
    fs::path d = tmp_dir();
    put(d / "k2.gr", "p tw 2 1\n1 2\n");
    auto res = run("--caps n=1 exact " + (d / "k2.gr").string() +
                   " --param treealpha");
    CHECK(res.exit_code == 1);
    json j = json::parse(res.out);
    CHECK(j["error"]["kind"] == "cap-exceeded");
}
