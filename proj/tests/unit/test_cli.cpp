#include <doctest.h>

#include <stdexcept>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "shiish/cli.h"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "shi-ish");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = shiish::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("shiish-test-" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("count") {
    auto r = run({"count", "--n", "4", "--graph", "complete"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["shi"]["regions"] == 125);
    CHECK(j["ish"]["regions"] == 125);
    CHECK(j["config_hash"].get<std::string>().size() == 16);

    auto e = json::parse(run({"count", "--n", "3", "--graph", "empty"}).out);
    CHECK(e["shi"]["regions"] == 6);
    CHECK(e["ish"]["regions"] == 6);

    auto d = json::parse(run({"count", "--n", "3", "--by", "dof"}).out);
    CHECK(d["shi"]["by_dof"] == d["ish"]["by_dof"]);
    CHECK(d["identical"] == true);
}

TEST_CASE("deterministic output and config hash") {
    auto a = run({"count", "--n", "3"}), b = run({"count", "--n", "3"});
    CHECK(a.out == b.out);
    auto c = run({"count", "--n", "3", "--graph", "path"});
    CHECK(json::parse(a.out)["config_hash"] != json::parse(c.out)["config_hash"]);
}

TEST_CASE("graph specs") {
    CHECK(shiish::cli::parse_graph_spec("1-2,2-3", 3) == shiish::Graph::path(3));
    CHECK(shiish::cli::parse_graph_spec("3-1", 3) == shiish::Graph(3, {{1, 3}}));
    auto file = temp_file("graph.json", R"({"n": 3, "edges": [[1, 2], [2, 3]]})");
    CHECK(shiish::cli::parse_graph_spec(file, 3) == shiish::Graph::path(3));
    CHECK_THROWS_AS(shiish::cli::parse_graph_spec(file, 4), std::invalid_argument);
    auto bad = temp_file("bad.json", R"({"n": 3, "edges": [[1, 5]]})");
    auto r = run({"count", "--n", "3", "--graph", bad});
    CHECK(r.code == 2);
    CHECK(r.err.find("error") != std::string::npos);
    CHECK(run({"count", "--n", "3", "--graph", "garbage"}).code == 2);
}

TEST_CASE("map") {
    auto fig4 = temp_file("fig4.json", R"({"pi": [4,1,7,3,8,5,6,2], "eps": [0,0,1,2,0,3,5,0]})");
    auto r = run({"map", "--bijection", "dominance", "--input", fig4});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["output"]["pi"] == json::parse("[2,3,4,1,5,7,8,6]"));
    CHECK(j["output"]["Pi"] == json::parse("[[1,2,5,8],[3],[4,6],[7]]"));
    CHECK(j["certificates"]["ceiling_partition"]["preserved"] == true);
    CHECK(j["certificates"]["dominant"]["preserved"] == true);

    auto basic = json::parse(run({"map", "--bijection", "basic", "--input", fig4}).out);
    CHECK_FALSE(basic.contains("certificates"));

    auto fig8 = temp_file("fig8.json", R"({"input": {"pi": [8,1,4,3,7,6,5,9,2], "eps": [0,0,0,1,2,5,0,6,0]}})");
    auto f = json::parse(run({"map", "--bijection", "freedom", "--input", fig8}).out);
    CHECK(f["certificates"]["dof"]["input"] == 3);
    CHECK(f["certificates"]["dof"]["output"] == 3);

    auto id = temp_file("id.json", R"({"pi": [1,2,3], "eps": [0,0,0]})");
    auto i = json::parse(run({"map", "--bijection", "dominance", "--input", id}).out);
    CHECK(i["output"]["pi"] == json::parse("[1,2,3]"));
    CHECK(i["output"]["Pi"] == json::parse("[[1],[2],[3]]"));
    CHECK(run({"map", "--bijection", "bounded", "--input", id}).code == 2);

    auto shi = temp_file("shi.json", j["output"].dump());
    auto back = json::parse(run({"map", "--bijection", "dominance", "--inverse", "--input", shi}).out);
    CHECK(back["output"] == json::parse(R"({"pi": [4,1,7,3,8,5,6,2], "eps": [0,0,1,2,0,3,5,0]})"));

    auto invalid = temp_file("invalid.json", R"({"pi": [2,1,3], "eps": [1,0,0]})");
    CHECK(run({"map", "--input", invalid}).code == 2);
}

TEST_CASE("verify") {
    auto r = run({"verify", "--suite", "cycle-lemma", "--n", "4"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["reports"][0]["data"]["words"] == 625);
    CHECK(j["reports"][0]["data"]["orbits"] == 125);
    CHECK(j["status"] == "pass");

    CHECK(run({"verify", "--suite", "negative-controls", "--n", "3"}).code == 0);
    auto f = json::parse(run({"verify", "--suite", "formulas", "--n", "3"}).out);
    CHECK(f["reports"][0]["data"]["char_poly_complete"] == "p^3 - 6*p^2 + 9*p");
    CHECK(run({"verify", "--suite", "thm-freedom", "--n", "7"}).code == 3);
    CHECK(run({"verify", "--suite", "nope"}).code == 2);
    CHECK(r.err.find("[progress]") != std::string::npos);
}

TEST_CASE("oracle") {
    auto p = json::parse(run({"oracle", "--arrangement", "ish", "--n", "3", "--graph", "path"}).out);
    CHECK(p["summary"]["regions"] == 13);
    CHECK(p["summary"]["ok"] == true);
    auto c = json::parse(run({"oracle", "--arrangement", "cox", "--n", "3"}).out);
    CHECK(c["summary"]["regions"] == 6);
    CHECK(c["summary"]["by_dof"] == json::parse(R"({"3": 6})"));
    auto s = run({"oracle", "--arrangement", "shi", "--n", "4"});
    CHECK(s.code == 0);
    CHECK(json::parse(s.out)["summary"]["matched"] == 125);
    auto big = run({"oracle", "--arrangement", "shi", "--n", "5"});
    CHECK(big.code == 3);
    CHECK(json::parse(big.out)["status"] == "skipped");
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"count", "--n", "0"}).code == 2);
    CHECK(run({"count", "--format", "xml"}).code == 2);
    CHECK(run({"count", "--help"}).code == 0);
    auto tsv = run({"count", "--n", "3", "--format", "tsv"});
    CHECK(tsv.out.rfind("statistic\tshi\tish\nregions\t16\t16\n", 0) == 0);
}

}
