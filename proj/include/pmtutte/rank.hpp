#pragma once

#include <vector>

#include "pmtutte/subsets.hpp"

namespace pmtutte {

// A set function f : 2^[n] -> Z stored as a full table indexed by SubsetMask.
// Valid rank functions satisfy f(empty) = 0 and submodularity; monotonicity is
// tracked but not required (duals and translates of polymatroids are valid
// generalized integer polymatroids without it).
struct RankFunction {
    int n = 0;
    std::vector<long long> values;  // size 2^n
    bool monotone = false;

    long long operator()(SubsetMask s) const { return values[s]; }
    SubsetMask full() const { return full_mask(n); }
    long long total() const { return values[full()]; }

    bool operator==(const RankFunction& o) const { return n == o.n && values == o.values; }
};

enum class Axiom { ZeroAtEmpty, Monotone, Submodular };

struct AxiomWitness {
    Axiom axiom;
    SubsetMask lhs = 0;
    SubsetMask rhs = 0;
};

struct ValidationReport {
    bool zeroAtEmpty = false;
    bool submodular = false;
    bool monotone = false;
    std::vector<AxiomWitness> witnesses;

    // Monotonicity does not gate validity.
    bool valid() const { return zeroAtEmpty && submodular; }
};

// Exhaustive check of all three axioms; never throws, reports every violation
// with a witness pair. Submodularity is checked over all 4^n pairs (I, J);
// monotonicity over all nested pairs I <= J.
ValidationReport validate_rank_function(const RankFunction& rf);

// Wraps a table into a RankFunction, filling in the monotone flag.
// Throws std::invalid_argument when the table is not a valid (generalized)
// polymatroid rank function.
RankFunction make_rank_function(int n, std::vector<long long> values);

// Matroid rank axioms on top of validity: 0 <= f(I) <= |I| and unit increments
// f(I) <= f(I+e) <= f(I)+1.
bool matroid_axioms_ok(const RankFunction& rf);

}  // namespace pmtutte
