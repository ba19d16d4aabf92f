#include <doctest.h>

#include <pmtutte/verify.hpp>

#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

using namespace pmtutte;

namespace {

Hypergraph triangle_hg() { return Hypergraph{3, {{0, 1}, {1, 2}, {0, 2}}}; }
Hypergraph path2_hg() { return Hypergraph{3, {{0, 1}, {1, 2}}}; }

}  // namespace

TEST_CASE("every theorem check passes on the worked examples") {
    const std::vector<Polymatroid> ps = {
        testing::demo3(),
        rank_from_hypergraph(triangle_hg()),
        dual_polymatroid(testing::demo3()),
        as_polymatroid(rank_from_uniform_matroid(4, 2)),
    };
    const auto grid = default_interpolation_grid();
    for (const auto& p : ps) {
        for (const CheckReport& report : {
                 check_interpolating(p, "unit", grid),
                 check_top_coefficient(p, "unit"),
                 check_subtop_coefficients(p, "unit"),
                 check_duality(p, "unit"),
                 check_divisibility(p, "unit"),
                 check_invariance(p, "unit", 17),
                 check_activity_lemmas(p, "unit"),
             }) {
            INFO(report.name << " on " << p.provenance << ": " << report.witness.dump());
            CHECK(report.passed);
            CHECK(report.instanceId == "unit");
        }
    }
}

TEST_CASE("default interpolation grid covers [1,4] in sixths") {
    const auto grid = default_interpolation_grid();
    REQUIRE(grid.size() == 19);
    CHECK(grid.front() == BigRat(1));
    CHECK(grid.back() == BigRat(4));
    CHECK(std::is_sorted(grid.begin(), grid.end()));
    for (const auto& t : grid) CHECK(t >= 1);
}

TEST_CASE("interpolation check rejects t below one") {
    CHECK_THROWS_AS(check_interpolating(testing::demo3(), "unit", {BigRat(1, 2)}),
                    std::invalid_argument);
}

TEST_CASE("scanning t below one finds the demo3 counterexamples") {
    const auto failures =
        explore_t(testing::demo3(), BigRat(-2), BigRat(4), BigRat(1, 6));
    bool sawThirdX = false;
    bool sawZeroY = false;
    for (const auto& f : failures) {
        CHECK(f.t < 1);  // the proved regime stays clean
        if (f.t == BigRat(1, 3) && f.axis == 'x') {
            sawThirdX = true;
            CHECK(f.support == std::vector<int>{0, 3});  // x^3 - 8/27
        }
        if (f.t == BigRat(0) && f.axis == 'y') {
            sawZeroY = true;
            CHECK(f.support == std::vector<int>{1, 3});  // y^3 - y
        }
    }
    CHECK(sawThirdX);
    CHECK(sawZeroY);

    CHECK(explore_t(testing::demo3(), BigRat(1), BigRat(4), BigRat(1, 6)).empty());
    CHECK_THROWS_AS(explore_t(testing::demo3(), BigRat(0), BigRat(1), BigRat(0)),
                    std::invalid_argument);
}

TEST_CASE("hypergraph corollaries, with and without the connectivity hypothesis") {
    const CheckReport tri = check_hypergraph_corollaries(triangle_hg(), "triangle");
    CHECK(tri.passed);
    CHECK(tri.note.empty());  // exterior clause exercised

    const CheckReport path = check_hypergraph_corollaries(path2_hg(), "path2");
    CHECK(path.passed);
    CHECK(path.note.find("exterior clause skipped") != std::string::npos);

    const Hypergraph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    const CheckReport full = check_hypergraph_corollaries(k4, "k4");
    CHECK(full.passed);
    CHECK(full.note.empty());
}

TEST_CASE("random instances are deterministic and valid") {
    const GeneratorKind kinds[] = {
        GeneratorKind::Hypergraph, GeneratorKind::Uniform,   GeneratorKind::Graphic,
        GeneratorKind::Dual,       GeneratorKind::Translate, GeneratorKind::Permute,
        GeneratorKind::Sum,        GeneratorKind::Truncate,  GeneratorKind::Mixed,
    };
    for (const GeneratorKind kind : kinds) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const InstanceSpec spec{seed, 4, kind, 5};
            const Instance a = random_instance(spec);
            const Instance b = random_instance(spec);
            INFO(instance_spec_id(spec));
            CHECK(a.poly.rank == b.poly.rank);
            CHECK(spec_to_json(a.spec) == spec_to_json(b.spec));
            CHECK(a.n() == 4);
            CHECK(validate_rank_function(a.poly.rank).valid());
            if (kind == GeneratorKind::Hypergraph) {
                const Hypergraph h = hypergraph_from_spec(a.spec);
                CHECK(bip_connected(h));
            }
        }
    }

    // Seeds actually matter.
    const Instance s1 = random_instance({1, 4, GeneratorKind::Mixed, 5});
    const Instance s2 = random_instance({2, 4, GeneratorKind::Mixed, 5});
    const bool differs =
        s1.poly.rank.values != s2.poly.rank.values || spec_to_json(s1.spec) != spec_to_json(s2.spec);
    CHECK(differs);
}

TEST_CASE("generator kind names round-trip") {
    CHECK(parse_generator_kind("mixed") == GeneratorKind::Mixed);
    CHECK(parse_generator_kind("hypergraph") == GeneratorKind::Hypergraph);
    CHECK(generator_kind_name(GeneratorKind::Truncate) == "truncate");
    CHECK_THROWS_AS(parse_generator_kind("nope"), std::invalid_argument);
    CHECK(instance_spec_id({7, 4, GeneratorKind::Mixed, 5}) ==
          "random(kind=mixed,seed=7,n=4,bound=5)");
}

TEST_CASE("lemma suite skips only the pairwise part above the cap") {
    const CheckReport capped = check_activity_lemmas(testing::demo3(), "unit", kDefaultBudget, 1);
    CHECK(capped.passed);
    CHECK(capped.note.find("pair") != std::string::npos);

    const CheckReport fullRun = check_activity_lemmas(testing::demo3(), "unit");
    CHECK(fullRun.passed);
    CHECK(fullRun.note.empty());
}
