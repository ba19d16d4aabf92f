#pragma once

#include <vector>

#include "pmtutte/errors.hpp"
#include "pmtutte/polymatroid.hpp"

namespace pmtutte {

// A lattice point of the base polytope: sum_{i in I} a_i <= f(I) for all I,
// with equality at I = [n]. Index 0 of the vector is element 1.
using BasisVector = std::vector<long long>;

// The subsets I with sum_{i in I} a_i = f(I), for a fixed basis a. Closed
// under union and intersection; always contains the empty set and [n].
struct TightFamily {
    int n = 0;
    std::vector<SubsetMask> sets;   // ascending mask order
    std::vector<bool> member;       // size 2^n

    bool contains(SubsetMask s) const { return member[s]; }
};

// Internal/external activity of a basis. Masks use bit (i-1) for element i;
// element 1 is always in both sets, so ie() >= 1.
struct ActivityProfile {
    SubsetMask internal = 0;  // Int(a)
    SubsetMask external = 0;  // Ext(a)

    int oi() const { return mask_size(internal & ~external); }
    int oe() const { return mask_size(external & ~internal); }
    int ie() const { return mask_size(internal & external); }
    int iota() const { return mask_size(internal); }
    int epsilon() const { return mask_size(external); }

    bool operator==(const ActivityProfile&) const = default;
};

// Membership in PB: all 2^n - 1 inequalities plus the total equality.
bool is_basis(const Polymatroid& p, const BasisVector& x);

// All lattice bases, duplicate-free, in lexicographic order. Depth-first
// search over coordinates with per-coordinate bounds
// [f([n]) - f([n]\{i}), f({i})] and prefix-subset pruning.
// Throws BudgetExceeded past `budget` bases and std::logic_error if the basis
// set comes out empty (impossible for a valid rank function).
std::vector<BasisVector> enumerate_bases(const Polymatroid& p,
                                         std::size_t budget = kDefaultBudget);

// Full tight-set family of a basis; verifies lattice closure before
// returning (failure means the input was not a basis of a valid polymatroid
// and raises std::logic_error). Throws std::invalid_argument if a is not in PB.
TightFamily tight_sets(const Polymatroid& p, const BasisVector& a);

// Is a + e_i - e_j in PB? Decided by the tight-set criterion: feasible iff no
// tight set contains i and avoids j. i, j are 1-based and distinct.
bool is_exchange_feasible(const Polymatroid& p, const BasisVector& a, int i, int j);
bool is_exchange_feasible(const TightFamily& tf, int i, int j);

// Activities straight from the definition: i is internally active iff
// a - e_i + e_j leaves PB for every j < i, externally iff a + e_i - e_j does.
ActivityProfile activity_direct(const Polymatroid& p, const BasisVector& a);

// Activities from one tight-family computation: i internally active iff some
// tight set contains [i-1] and avoids i; externally active iff some tight set
// has minimum element i.
ActivityProfile activity_tight(const Polymatroid& p, const BasisVector& a);
ActivityProfile activity_tight(const TightFamily& tf);

// The greedy basis a_k = f([k]) - f([k-1]); checks membership and that its
// internal activity is n (std::logic_error otherwise).
BasisVector lex_max_basis(const Polymatroid& p);

}  // namespace pmtutte
