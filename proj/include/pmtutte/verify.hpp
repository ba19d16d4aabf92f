#pragma once

#include <pmtutte/errors.hpp>
#include <pmtutte/instance.hpp>
#include <pmtutte/polymatroid.hpp>
#include <pmtutte/rational.hpp>
#include <pmtutte/report.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pmtutte {

// Each check_* verifies one proved statement about J_P on one instance and
// returns a CheckReport; a failure is a bug somewhere, never a soft warning.

// Support of J(x,t) and (if bothAxes) J(t,y) is a contiguous degree interval
// for every t in ts; requires every t >= 1 (the t < 1 regime is explore_t's).
CheckReport check_interpolating(const Polymatroid& p, const std::string& instanceId,
                                const std::vector<BigRat>& ts, bool bothAxes = true,
                                std::size_t budget = kDefaultBudget);

// The default t grid for the interpolation check: every sixth in [1, 4].
std::vector<BigRat> default_interpolation_grid();

// Degree-n coefficients of J(x,1) and J(1,y) are both 1.
CheckReport check_top_coefficient(const Polymatroid& p, const std::string& instanceId,
                                  std::size_t budget = kDefaultBudget);

// [x^{n-1}] J(x,1) = sum_i f({i}) - f([n]) and
// [y^{n-1}] J(1,y) = sum_i f([n]\{i}) - (n-1) f([n]).
CheckReport check_subtop_coefficients(const Polymatroid& p, const std::string& instanceId,
                                      std::size_t budget = kDefaultBudget);

// Linear coefficient of the interior polynomial is |eps| - (|E|+|V|) + 1,
// where |eps| is the total hyperedge size; if H - e stays connected for every
// hyperedge e, the linear coefficient of the exterior polynomial is |V| - 1
// (that clause is skipped, with a note, when the hypothesis fails).
CheckReport check_hypergraph_corollaries(const Hypergraph& h, const std::string& instanceId,
                                         std::size_t budget = kDefaultBudget);

// J of the dual polymatroid equals J with x and y swapped.
CheckReport check_duality(const Polymatroid& p, const std::string& instanceId,
                          std::size_t budget = kDefaultBudget);

// J is divisible by (x+y-1).
CheckReport check_divisibility(const Polymatroid& p, const std::string& instanceId,
                               std::size_t budget = kDefaultBudget);

// J is unchanged under 5 seeded random translations and 5 seeded random
// relabelings of the ground set.
CheckReport check_invariance(const Polymatroid& p, const std::string& instanceId,
                             std::uint64_t seed = 0, std::size_t budget = kDefaultBudget);

// Structural facts behind the activity count, tested exhaustively:
//  - every tight family is closed under union and intersection;
//  - the tight-set exchange criterion agrees with direct membership of
//    a + e_i - e_j for all i != j;
//  - the tight-set activity computation agrees with the direct definition;
//  - { iota(a) : a basis } is an integer interval with maximum n;
// and, when the basis count is at most pairLemmaCap (else skipped with a
// note), over all basis pairs:
//  - the basis exchange axiom;
//  - for a, b equal outside {i,j} with a_i < b_i: k in Int(a) implies
//    k in Int(b) for every k > i, and k in Int(a) iff k in Int(b) for every
//    k > max(i,j).
CheckReport check_activity_lemmas(const Polymatroid& p, const std::string& instanceId,
                                  std::size_t budget = kDefaultBudget,
                                  std::size_t pairLemmaCap = 5000);

// One non-contiguous slice support found while scanning the t grid.
struct InterpolationFailure {
    BigRat t;
    char axis = 'x';           // 'x': slice J(x,t); 'y': slice J(t,y)
    std::vector<int> support;  // degrees with nonzero coefficient, ascending
};

// Scans t = tMin, tMin+step, ... while t <= tMax on both axes and returns
// every interpolation failure, ordered by t with axis 'x' first.
std::vector<InterpolationFailure> explore_t(const Polymatroid& p, const BigRat& tMin,
                                            const BigRat& tMax, const BigRat& step,
                                            std::size_t budget = kDefaultBudget);

enum class GeneratorKind {
    Hypergraph,
    Uniform,
    Graphic,
    Dual,
    Translate,
    Permute,
    Sum,
    Truncate,
    Mixed,
};

GeneratorKind parse_generator_kind(const std::string& name);
std::string generator_kind_name(GeneratorKind kind);

struct InstanceSpec {
    std::uint64_t seed = 0;
    int n = 4;
    GeneratorKind kind = GeneratorKind::Mixed;
    long long rankBound = 5;  // magnitude bound for generated base ranks
};

std::string instance_spec_id(const InstanceSpec& spec);

// Deterministic under spec: same parameters give the identical instance on
// every run and platform. The result always passes rank validation; a
// violation would be a generator bug and throws std::logic_error.
Instance random_instance(const InstanceSpec& spec);
Polymatroid random_polymatroid(const InstanceSpec& spec);

}  // namespace pmtutte
