#include <doctest.h>

#include <pmtutte/rank.hpp>

#include "oracles.hpp"

#include <stdexcept>

using namespace pmtutte;

TEST_CASE("demo3 table satisfies the axioms and is monotone") {
    const RankFunction f = make_rank_function(3, {0, 2, 2, 3, 1, 3, 3, 3});
    CHECK(f.monotone);
    CHECK(f.total() == 3);
    CHECK(f(element_bit(3)) == 1);

    const ValidationReport report = validate_rank_function(f);
    CHECK(report.valid());
    CHECK(report.zeroAtEmpty);
    CHECK(report.submodular);
    CHECK(report.monotone);
    CHECK(report.witnesses.empty());
}

TEST_CASE("nonzero value on the empty set is rejected with a witness") {
    RankFunction f;
    f.n = 1;
    f.values = {1, 2};
    const ValidationReport report = validate_rank_function(f);
    CHECK_FALSE(report.valid());
    CHECK_FALSE(report.zeroAtEmpty);
    REQUIRE_FALSE(report.witnesses.empty());
    CHECK(report.witnesses.front().axiom == Axiom::ZeroAtEmpty);

    CHECK_THROWS_AS(make_rank_function(1, {1, 2}), std::invalid_argument);
}

TEST_CASE("submodularity violation is caught exhaustively") {
    // f{1}=f{2}=1 but f{1,2}=3 > f{1}+f{2}.
    RankFunction f;
    f.n = 2;
    f.values = {0, 1, 1, 3};
    const ValidationReport report = validate_rank_function(f);
    CHECK_FALSE(report.submodular);
    CHECK_FALSE(report.valid());
    bool found = false;
    for (const AxiomWitness& w : report.witnesses) {
        if (w.axiom == Axiom::Submodular) found = true;
    }
    CHECK(found);
    CHECK_THROWS_AS(make_rank_function(2, {0, 1, 1, 3}), std::invalid_argument);
}

TEST_CASE("monotonicity is tracked but does not gate validity") {
    // f{1,2} < f{1}: not monotone, still submodular with f(empty)=0.
    const RankFunction f = make_rank_function(2, {0, 1, 0, 0});
    CHECK_FALSE(f.monotone);
    const ValidationReport report = validate_rank_function(f);
    CHECK(report.valid());
    CHECK_FALSE(report.monotone);
    bool sawMonotoneWitness = false;
    for (const AxiomWitness& w : report.witnesses) {
        if (w.axiom == Axiom::Monotone) sawMonotoneWitness = true;
    }
    CHECK(sawMonotoneWitness);
}

TEST_CASE("table size must match the declared ground size") {
    CHECK_THROWS_AS(make_rank_function(2, {0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_rank_function(0, {0}), std::invalid_argument);
    CHECK_THROWS_AS(make_rank_function(21, {}), std::invalid_argument);
}

TEST_CASE("matroid axiom filter") {
    // Uniform-style tables pass; ranks above |I| or jumps above 1 fail.
    CHECK(matroid_axioms_ok(make_rank_function(2, {0, 1, 1, 2})));
    CHECK(matroid_axioms_ok(make_rank_function(2, {0, 1, 1, 1})));
    CHECK(matroid_axioms_ok(make_rank_function(1, {0, 0})));
    CHECK_FALSE(matroid_axioms_ok(testing::demo3().rank));  // f{1} = 2 > 1
}
