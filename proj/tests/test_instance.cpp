#include <doctest.h>

#include <pmtutte/instance.hpp>

#include "oracles.hpp"

#include <cstdlib>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

using namespace pmtutte;

namespace {

std::filesystem::path instance_dir() {
    if (const char* dir = std::getenv("PMTUTTE_INSTANCE_DIR")) return dir;
    return "instances";
}

// Asserts that `fn` throws std::invalid_argument whose message contains `needle`.
template <typename Fn>
void expect_invalid(Fn&& fn, const std::string& needle) {
    try {
        fn();
        FAIL_CHECK("expected std::invalid_argument containing \"" << needle << "\"");
    } catch (const std::invalid_argument& e) {
        const std::string what = e.what();
        INFO("message: " << what);
        CHECK(what.find(needle) != std::string::npos);
    }
}

}  // namespace

TEST_CASE("explicit instance text parses to the demo3 table") {
    const Instance inst = parse_instance(
        R"({"n": 3, "rank": {"type": "explicit", "values": [0,2,2,3,1,3,3,3]}})");
    CHECK(inst.n() == 3);
    CHECK(inst.spec.type == RankSpec::Type::Explicit);
    CHECK(inst.poly.rank == testing::demo3().rank);
}

TEST_CASE("hypergraph instance text parses with 1-based labels") {
    const Instance inst = parse_instance(
        R"({"n": 3, "rank": {"type": "hypergraph", "vertices": 3,
            "edges": [[1,2],[2,3],[1,3]]}})");
    CHECK(inst.poly.rank.values == std::vector<long long>{0, 1, 1, 2, 1, 2, 2, 2});
    const Hypergraph h = hypergraph_from_spec(inst.spec);
    CHECK(h.vertexCount == 3);
    CHECK(h.edges == std::vector<std::vector<int>>{{0, 1}, {1, 2}, {0, 2}});
    CHECK_THROWS_AS(
        hypergraph_from_spec(RankSpec{}),  // explicit recipe, not a hypergraph
        std::invalid_argument);
}

TEST_CASE("wrapper recipes compose the combinators") {
    const std::string demo3 = R"({"type": "explicit", "values": [0,2,2,3,1,3,3,3]})";
    const Instance dual =
        parse_instance(R"({"n": 3, "rank": {"type": "dual", "of": )" + demo3 + "}}");
    CHECK(dual.poly.rank == dual_polymatroid(testing::demo3()).rank);

    const Instance shifted = parse_instance(
        R"({"n": 3, "rank": {"type": "translate", "by": [1,1,1], "of": )" + demo3 + "}}");
    CHECK(shifted.poly.rank.values == std::vector<long long>{0, 3, 3, 5, 2, 5, 5, 6});

    const Instance relabeled = parse_instance(
        R"({"n": 3, "rank": {"type": "permute", "perm": [2,3,1], "of": )" + demo3 + "}}");
    CHECK(relabeled.poly.rank == permute_rank(testing::demo3(), {2, 3, 1}).rank);

    const Instance summed = parse_instance(
        R"({"n": 3, "rank": {"type": "sum", "of": [)" + demo3 +
        R"(, {"type": "uniform", "n": 3, "r": 1}]}})");
    CHECK(summed.poly.rank.values == std::vector<long long>{0, 3, 3, 4, 2, 4, 4, 4});

    const Instance capped = parse_instance(
        R"({"n": 3, "rank": {"type": "truncate", "c": 2, "of": )" + demo3 + "}}");
    CHECK(capped.poly.rank.values == std::vector<long long>{0, 2, 2, 2, 1, 2, 2, 2});

    const Instance uniform =
        parse_instance(R"({"n": 4, "rank": {"type": "uniform", "n": 4, "r": 2}})");
    CHECK(uniform.poly.rank == rank_from_uniform_matroid(4, 2).rank);

    const Instance graphic = parse_instance(
        R"({"n": 3, "rank": {"type": "graphic", "vertices": 3, "edges": [[1,2],[2,3],[3,1]]}})");
    CHECK(graphic.poly.rank == rank_from_graphic_matroid(3, {{0, 1}, {1, 2}, {2, 0}}).rank);
}

TEST_CASE("every bundled instance file parses and survives a round trip") {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(instance_dir())) {
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    }
    REQUIRE(files.size() >= 13);
    for (const auto& file : files) {
        INFO("file: " << file.string());
        const Instance inst = parse_instance_file(file.string());
        const std::string dumped = instance_to_json(inst).dump();
        const Instance again = parse_instance(dumped);
        CHECK(again.poly.rank == inst.poly.rank);
        CHECK(instance_to_json(again) == instance_to_json(inst));
    }
}

TEST_CASE("shape-only parsing defers axiom checks to the validator") {
    // Non-submodular explicit table inside a dual wrapper: the shape parser
    // accepts it and the raw evaluator computes the wrapped table.
    const std::string text =
        R"({"n": 2, "rank": {"type": "dual", "of": {"type": "explicit", "values": [0,1,1,3]}}})";
    const auto [n, spec] = parse_instance_spec(text);
    CHECK(n == 2);
    CHECK(spec_rank_table(spec) == std::vector<long long>{0, -2, -2, -3});
    CHECK_THROWS_AS(build_polymatroid(spec), std::invalid_argument);
}

TEST_CASE("parse errors carry positions and field paths") {
    expect_invalid([] { parse_instance("{"); }, "line 1");
    expect_invalid([] { parse_instance("[1,2]"); }, "expected a top-level object");
    expect_invalid([] { parse_instance(R"({"n": 1})"); }, "missing field \"rank\"");
    expect_invalid(
        [] { parse_instance(R"({"n": 1, "rank": {"type": "explicit", "values": [0,1]}, "x": 0})"); },
        "unknown field \"x\"");
    expect_invalid(
        [] { parse_instance(R"({"n": 1, "rank": {"type": "mystery"}})"); },
        "$.rank.type: unknown rank type \"mystery\"");
    expect_invalid(
        [] { parse_instance(R"({"n": 2, "rank": {"type": "explicit", "values": [0,2,2,3,1,3,3,3]}})"); },
        "declared n=2 but the rank recipe describes n=3");
    expect_invalid(
        [] { parse_instance(R"({"n": 2, "rank": {"type": "explicit", "values": [0,1,1]}})"); },
        "need 2^n entries");
    expect_invalid(
        [] { parse_instance(R"({"n": 1, "rank": {"type": "explicit", "values": [0,"x"]}})"); },
        "$.rank.values[1]: expected an integer");
    expect_invalid(
        [] {
            parse_instance(
                R"({"n": 2, "rank": {"type": "hypergraph", "vertices": 3, "edges": [[1,2],[2,4]]}})");
        },
        "$.rank.edges[1][1]: vertex label out of range [1, 3]");
    expect_invalid(
        [] { parse_instance(R"({"n": 0, "rank": {"type": "explicit", "values": [0]}})"); },
        "$.n: value 0 out of range [1, 20]");
    expect_invalid(
        [] { parse_instance(R"({"n": 4, "rank": {"type": "uniform", "n": 25, "r": 2}})"); },
        "$.rank.n: value 25 out of range [1, 20]");
    expect_invalid(
        [] { parse_instance(R"({"n": 3, "rank": {"type": "graphic", "vertices": 3,
                               "edges": [[1,2,3]]}})"); },
        "graph edges are [u, v] pairs");
    expect_invalid([] { parse_instance_file("no/such/file.json"); }, "cannot open instance file");
}

TEST_CASE("polynomial JSON forms") {
    CHECK(poly_to_json(testing::demo3_jp()).dump() ==
          R"([[0,1,"-1"],[0,3,"1"],[1,1,"-1"],[1,2,"3"],[2,0,"-1"],[2,1,"3"],[3,0,"1"]])");

    UnivariateRationalPolynomial slice;  // x^3 - 8/27
    slice.add_term(3, BigRat(1));
    slice.add_term(0, BigRat(-8, 27));
    CHECK(poly_to_json(slice).dump() == R"([[0,"-8/27"],[3,"1"]])");

    CHECK(poly_to_json(BivariatePolynomial{}).dump() == "[]");
}
