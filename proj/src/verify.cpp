#include <pmtutte/verify.hpp>

#include <pmtutte/basis.hpp>
#include <pmtutte/subsets.hpp>
#include <pmtutte/tutte.hpp>

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace pmtutte {

namespace {

using Clock = std::chrono::steady_clock;

CheckReport start_report(const std::string& name, const std::string& instanceId) {
    CheckReport report;
    report.name = name;
    report.instanceId = instanceId;
    report.passed = true;
    report.witness = nullptr;
    return report;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

nlohmann::json mask_json(SubsetMask s) { return nlohmann::json(subset_elements(s)); }

}  // namespace

std::vector<BigRat> default_interpolation_grid() {
    std::vector<BigRat> grid;
    for (int k = 6; k <= 24; ++k) {
        BigRat t(k, 6);
        t.canonicalize();
        grid.push_back(t);
    }
    return grid;
}

CheckReport check_interpolating(const Polymatroid& p, const std::string& instanceId,
                                const std::vector<BigRat>& ts, bool bothAxes,
                                std::size_t budget) {
    for (const BigRat& t : ts) {
        if (t < 1) {
            throw std::invalid_argument(
                "check_interpolating requires every t >= 1; use explore_t for the open regime");
        }
    }
    const auto t0 = Clock::now();
    CheckReport report = start_report("interpolating", instanceId);
    const BivariatePolynomial jp = jp_polynomial(p, budget);
    for (const BigRat& t : ts) {
        const SupportInfo onX = support_info(specialize_y(jp, t));
        if (!onX.isInterval) {
            report.passed = false;
            report.witness = {{"t", format_rational(t)}, {"axis", "x"}, {"support", onX.degrees}};
            break;
        }
        if (!bothAxes) continue;
        const SupportInfo onY = support_info(specialize_x(jp, t));
        if (!onY.isInterval) {
            report.passed = false;
            report.witness = {{"t", format_rational(t)}, {"axis", "y"}, {"support", onY.degrees}};
            break;
        }
    }
    report.elapsedSeconds = seconds_since(t0);
    return report;
}

CheckReport check_top_coefficient(const Polymatroid& p, const std::string& instanceId,
                                  std::size_t budget) {
    const auto t0 = Clock::now();
    CheckReport report = start_report("top-coefficient", instanceId);
    const int n = p.n();
    const BivariatePolynomial jp = jp_polynomial(p, budget);
    const BigRat topX = specialize_y(jp, BigRat(1)).coeff(n);
    const BigRat topY = specialize_x(jp, BigRat(1)).coeff(n);
    if (topX != 1 || topY != 1) {
        report.passed = false;
        report.witness = {{"degree", n},
                          {"coefficient_x_axis", format_rational(topX)},
                          {"coefficient_y_axis", format_rational(topY)}};
    }
    report.elapsedSeconds = seconds_since(t0);
    return report;
}

CheckReport check_subtop_coefficients(const Polymatroid& p, const std::string& instanceId,
                                      std::size_t budget) {
    const auto t0 = Clock::now();
    CheckReport report = start_report("subtop-coefficients", instanceId);
    const RankFunction& f = p.rank;
    const int n = p.n();

    long long expectedX = -f.total();
    for (int i = 1; i <= n; ++i) expectedX += f(element_bit(i));
    long long expectedY = -(static_cast<long long>(n) - 1) * f.total();
    for (int i = 1; i <= n; ++i) expectedY += f(f.full() & ~element_bit(i));

    const BivariatePolynomial jp = jp_polynomial(p, budget);
    const BigRat gotX = specialize_y(jp, BigRat(1)).coeff(n - 1);
    const BigRat gotY = specialize_x(jp, BigRat(1)).coeff(n - 1);
    if (gotX != BigRat(static_cast<long>(expectedX)) ||
        gotY != BigRat(static_cast<long>(expectedY))) {
        report.passed = false;
        report.witness = {{"degree", n - 1},
                          {"coefficient_x_axis", format_rational(gotX)},
                          {"expected_x_axis", expectedX},
                          {"coefficient_y_axis", format_rational(gotY)},
                          {"expected_y_axis", expectedY}};
    }
    report.elapsedSeconds = seconds_since(t0);
    return report;
}

CheckReport check_hypergraph_corollaries(const Hypergraph& h, const std::string& instanceId,
                                         std::size_t budget) {
    const auto t0 = Clock::now();
    CheckReport report = start_report("hypergraph-linear-coefficients", instanceId);
    const Polymatroid p = rank_from_hypergraph(h);
    const int n = h.n();
    const int vertexCount = h.vertexCount;
    long long incidences = 0;  // |eps|: total size of all hyperedges
    for (const auto& edge : h.edges) incidences += static_cast<long long>(edge.size());

    const BivariatePolynomial jp = jp_polynomial(p, budget);
    const UnivariateRationalPolynomial interior = interior_polynomial(jp, n);
    const long long expectedInterior = incidences - (n + vertexCount) + 1;
    if (interior.coeff(1) != BigRat(static_cast<long>(expectedInterior))) {
        report.passed = false;
        report.witness = {{"polynomial", "interior"},
                          {"linear_coefficient", format_rational(interior.coeff(1))},
                          {"expected", expectedInterior}};
        report.elapsedSeconds = seconds_since(t0);
        return report;
    }

    bool everyDeletionConnected = true;
    for (int e = 1; e <= n && everyDeletionConnected; ++e) {
        everyDeletionConnected = bip_connected(h, e);
    }
    if (!everyDeletionConnected) {
        report.note = "exterior clause skipped: removing some hyperedge disconnects the hypergraph";
    } else {
        const UnivariateRationalPolynomial exterior = exterior_polynomial(jp, n);
        const long long expectedExterior = vertexCount - 1;
        if (exterior.coeff(1) != BigRat(static_cast<long>(expectedExterior))) {
            report.passed = false;
            report.witness = {{"polynomial", "exterior"},
                              {"linear_coefficient", format_rational(exterior.coeff(1))},
                              {"expected", expectedExterior}};
        }
    }
    report.elapsedSeconds = seconds_since(t0);
    return report;
}

CheckReport check_duality(const Polymatroid& p, const std::string& instanceId,
                          std::size_t budget) {
    const auto t0 = Clock::now();
    CheckReport report = start_report("duality", instanceId);
    const BivariatePolynomial jp = jp_polynomial(p, budget);
    const BivariatePolynomial jpDual = jp_polynomial(dual_polymatroid(p), budget);
    if (jpDual != jp.swap_xy()) {
        report.passed = false;
        report.witness = {{"jp", jp.to_string()}, {"jp_dual", jpDual.to_string()}};
    }
    report.elapsedSeconds = seconds_since(t0);
    return report;
}

CheckReport check_divisibility(const Polymatroid& p, const std::string& instanceId,
                               std::size_t budget) {
    const auto t0 = Clock::now();
    CheckReport report = start_report("divisibility", instanceId);
    const BivariatePolynomial jp = jp_polynomial(p, budget);
    const auto [quotient, remainder] = divmod_xy1(jp);
    (void)quotient;
    if (!remainder.is_zero()) {
        report.passed = false;
        report.witness = {{"jp", jp.to_string()}, {"remainder", remainder.to_string()}};
    }
    report.elapsedSeconds = seconds_since(t0);
    return report;
}

namespace {

// Deterministic pseudo-random stream: raw mt19937_64 draws reduced by
// rejection sampling, so results are identical across platforms and library
// versions (std::uniform_int_distribution makes no such promise).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % bound;
        }
    }

    long long range(long long lo, long long hi) {  // inclusive bounds
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    std::vector<int> permutation(int n) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
        for (int i = n - 1; i > 0; --i) {
            const auto j = static_cast<std::size_t>(below(static_cast<std::uint64_t>(i) + 1));
            std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
        }
        return perm;
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace

CheckReport check_invariance(const Polymatroid& p, const std::string& instanceId,
                             std::uint64_t seed, std::size_t budget) {
    const auto t0 = Clock::now();
    CheckReport report = start_report("invariance", instanceId);
    const BivariatePolynomial jp = jp_polynomial(p, budget);
    Rng rng(seed);
    const int n = p.n();

    for (int round = 0; round < 5 && report.passed; ++round) {
        std::vector<long long> shift(static_cast<std::size_t>(n));
        for (long long& v : shift) v = rng.range(-5, 5);
        const BivariatePolynomial jpShifted = jp_polynomial(translate_rank(p, shift), budget);
        if (jpShifted != jp) {
            report.passed = false;
            report.witness = {{"operation", "translate"},
                              {"by", shift},
                              {"jp", jp.to_string()},
                              {"jp_transformed", jpShifted.to_string()}};
        }
    }
    for (int round = 0; round < 5 && report.passed; ++round) {
        const std::vector<int> perm = rng.permutation(n);
        const BivariatePolynomial jpPermuted = jp_polynomial(permute_rank(p, perm), budget);
        if (jpPermuted != jp) {
            report.passed = false;
            report.witness = {{"operation", "permute"},
                              {"perm", perm},
                              {"jp", jp.to_string()},
                              {"jp_transformed", jpPermuted.to_string()}};
        }
    }
    report.elapsedSeconds = seconds_since(t0);
    return report;
}

namespace {

struct BasisVectorHash {
    std::size_t operator()(const BasisVector& v) const {
        std::size_t h = 1469598103934665603ull;
        for (long long x : v) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

CheckReport check_activity_lemmas(const Polymatroid& p, const std::string& instanceId,
                                  std::size_t budget, std::size_t pairLemmaCap) {
    const auto t0 = Clock::now();
    CheckReport report = start_report("activity-lemmas", instanceId);
    const int n = p.n();
    const std::vector<BasisVector> bases = enumerate_bases(p, budget);

    const auto finish = [&]() {
        report.elapsedSeconds = seconds_since(t0);
        return report;
    };
    const auto fail = [&](nlohmann::json witness) {
        report.passed = false;
        report.witness = std::move(witness);
    };

    std::vector<ActivityProfile> profiles;
    profiles.reserve(bases.size());
    std::set<int> iotas;
    for (const BasisVector& a : bases) {
        const TightFamily tf = tight_sets(p, a);

        // Closure of the tight family under union and intersection.
        for (std::size_t s = 0; s < tf.sets.size(); ++s) {
            for (std::size_t r = s + 1; r < tf.sets.size(); ++r) {
                const SubsetMask u = tf.sets[s] | tf.sets[r];
                const SubsetMask w = tf.sets[s] & tf.sets[r];
                if (!tf.contains(u) || !tf.contains(w)) {
                    fail({{"lemma", "tight-family-closure"},
                          {"basis", a},
                          {"set_a", mask_json(tf.sets[s])},
                          {"set_b", mask_json(tf.sets[r])},
                          {"missing", mask_json(tf.contains(u) ? w : u)}});
                    return finish();
                }
            }
        }

        // Tight-set exchange criterion vs. direct membership of a + e_i - e_j.
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                BasisVector moved = a;
                ++moved[static_cast<std::size_t>(i) - 1];
                --moved[static_cast<std::size_t>(j) - 1];
                if (is_exchange_feasible(tf, i, j) != is_basis(p, moved)) {
                    fail({{"lemma", "exchange-criterion"},
                          {"basis", a},
                          {"i", i},
                          {"j", j}});
                    return finish();
                }
            }
        }

        // The two activity computations must agree.
        const ActivityProfile viaTight = activity_tight(tf);
        const ActivityProfile viaDirect = activity_direct(p, a);
        if (viaTight != viaDirect) {
            fail({{"lemma", "activity-oracle-agreement"},
                  {"basis", a},
                  {"internal_tight", mask_json(viaTight.internal)},
                  {"internal_direct", mask_json(viaDirect.internal)},
                  {"external_tight", mask_json(viaTight.external)},
                  {"external_direct", mask_json(viaDirect.external)}});
            return finish();
        }
        profiles.push_back(viaTight);
        iotas.insert(viaTight.iota());
    }

    // Internal activities form an integer interval whose maximum is n.
    if (*iotas.rbegin() != n ||
        *iotas.rbegin() - *iotas.begin() + 1 != static_cast<int>(iotas.size())) {
        fail({{"lemma", "internal-activity-interval"},
              {"iota_values", std::vector<int>(iotas.begin(), iotas.end())},
              {"n", n}});
        return finish();
    }

    if (bases.size() > pairLemmaCap) {
        report.note = "pairwise lemmas skipped: " + std::to_string(bases.size()) +
                      " bases exceed the cap of " + std::to_string(pairLemmaCap);
        return finish();
    }

    std::unordered_set<BasisVector, BasisVectorHash> basisSet(bases.begin(), bases.end());
    const auto isBasisFast = [&](const BasisVector& v) { return basisSet.count(v) != 0; };

    for (std::size_t ia = 0; ia < bases.size(); ++ia) {
        for (std::size_t ib = 0; ib < bases.size(); ++ib) {
            if (ia == ib) continue;
            const BasisVector& a = bases[ia];
            const BasisVector& b = bases[ib];

            // Basis exchange axiom: for each i with a_i > b_i there is a j
            // with a_j < b_j such that both a - e_i + e_j and b + e_i - e_j
            // are bases.
            for (int i = 1; i <= n; ++i) {
                if (a[static_cast<std::size_t>(i) - 1] <= b[static_cast<std::size_t>(i) - 1])
                    continue;
                bool found = false;
                for (int j = 1; j <= n && !found; ++j) {
                    if (a[static_cast<std::size_t>(j) - 1] >= b[static_cast<std::size_t>(j) - 1])
                        continue;
                    BasisVector fromA = a;
                    --fromA[static_cast<std::size_t>(i) - 1];
                    ++fromA[static_cast<std::size_t>(j) - 1];
                    BasisVector fromB = b;
                    ++fromB[static_cast<std::size_t>(i) - 1];
                    --fromB[static_cast<std::size_t>(j) - 1];
                    found = isBasisFast(fromA) && isBasisFast(fromB);
                }
                if (!found) {
                    fail({{"lemma", "basis-exchange"}, {"a", a}, {"b", b}, {"i", i}});
                    return finish();
                }
            }

            // Activity transport along a single exchange: a and b equal
            // outside {i, j}, a_i < b_i (hence a_j > b_j).
            std::vector<int> differing;
            for (int k = 1; k <= n; ++k) {
                if (a[static_cast<std::size_t>(k) - 1] != b[static_cast<std::size_t>(k) - 1])
                    differing.push_back(k);
            }
            if (differing.size() != 2) continue;
            const bool firstSmaller = a[static_cast<std::size_t>(differing[0]) - 1] <
                                      b[static_cast<std::size_t>(differing[0]) - 1];
            const int i = firstSmaller ? differing[0] : differing[1];
            const SubsetMask intA = profiles[ia].internal;
            const SubsetMask intB = profiles[ib].internal;
            for (int k = i + 1; k <= n; ++k) {
                if (mask_contains(intA, k) && !mask_contains(intB, k)) {
                    fail({{"lemma", "activity-transport"},
                          {"a", a},
                          {"b", b},
                          {"i", i},
                          {"k", k}});
                    return finish();
                }
            }
            for (int k = std::max(differing[0], differing[1]) + 1; k <= n; ++k) {
                if (mask_contains(intA, k) != mask_contains(intB, k)) {
                    fail({{"lemma", "activity-transport-iff"},
                          {"a", a},
                          {"b", b},
                          {"k", k}});
                    return finish();
                }
            }
        }
    }
    return finish();
}

std::vector<InterpolationFailure> explore_t(const Polymatroid& p, const BigRat& tMin,
                                            const BigRat& tMax, const BigRat& step,
                                            std::size_t budget) {
    if (step <= 0) throw std::invalid_argument("explore_t step must be positive");
    const BivariatePolynomial jp = jp_polynomial(p, budget);
    std::vector<InterpolationFailure> failures;
    for (BigRat t = tMin; t <= tMax; t += step) {
        const SupportInfo onX = support_info(specialize_y(jp, t));
        if (!onX.isInterval) failures.push_back({t, 'x', onX.degrees});
        const SupportInfo onY = support_info(specialize_x(jp, t));
        if (!onY.isInterval) failures.push_back({t, 'y', onY.degrees});
    }
    return failures;
}

namespace {

const struct {
    GeneratorKind kind;
    const char* name;
} kKindNames[] = {
    {GeneratorKind::Hypergraph, "hypergraph"},
    {GeneratorKind::Uniform, "uniform"},
    {GeneratorKind::Graphic, "graphic"},
    {GeneratorKind::Dual, "dual"},
    {GeneratorKind::Translate, "translate"},
    {GeneratorKind::Permute, "permute"},
    {GeneratorKind::Sum, "sum"},
    {GeneratorKind::Truncate, "truncate"},
    {GeneratorKind::Mixed, "mixed"},
};

// Vertices reachable from vertex 0 through hyperedges.
std::vector<bool> reached_vertices(const Hypergraph& h) {
    std::vector<bool> vertexSeen(static_cast<std::size_t>(h.vertexCount), false);
    std::vector<bool> edgeSeen(h.edges.size(), false);
    std::vector<int> stack = {0};
    vertexSeen[0] = true;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (std::size_t e = 0; e < h.edges.size(); ++e) {
            if (edgeSeen[e]) continue;
            const auto& edge = h.edges[e];
            if (std::find(edge.begin(), edge.end(), v) == edge.end()) continue;
            edgeSeen[e] = true;
            for (int u : edge) {
                if (!vertexSeen[static_cast<std::size_t>(u)]) {
                    vertexSeen[static_cast<std::size_t>(u)] = true;
                    stack.push_back(u);
                }
            }
        }
    }
    return vertexSeen;
}

RankSpec gen_hypergraph(Rng& rng, int n, long long bound) {
    const long long mBound = std::min<long long>(bound, 5);
    const int vertexCount = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(mBound)));

    RankSpec spec;
    spec.type = RankSpec::Type::Hypergraph;
    spec.vertices = vertexCount;
    for (int e = 0; e < n; ++e) {
        const int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(vertexCount)));
        std::vector<int> labels(static_cast<std::size_t>(vertexCount));
        for (int v = 0; v < vertexCount; ++v) labels[static_cast<std::size_t>(v)] = v + 1;
        for (int k = 0; k < size; ++k) {
            const auto j = static_cast<std::size_t>(k) +
                           static_cast<std::size_t>(rng.below(
                               static_cast<std::uint64_t>(vertexCount - k)));
            std::swap(labels[static_cast<std::size_t>(k)], labels[j]);
        }
        labels.resize(static_cast<std::size_t>(size));
        std::sort(labels.begin(), labels.end());
        spec.edges.push_back(std::move(labels));
    }

    // Connectivity repair: anchor vertex 1 in the first edge, then pull each
    // still-unreached vertex into it.
    auto& anchor = spec.edges.front();
    if (std::find(anchor.begin(), anchor.end(), 1) == anchor.end()) {
        anchor.push_back(1);
        std::sort(anchor.begin(), anchor.end());
    }
    for (;;) {
        const std::vector<bool> seen = reached_vertices(hypergraph_from_spec(spec));
        const auto missing = std::find(seen.begin(), seen.end(), false);
        if (missing == seen.end()) break;
        anchor.push_back(static_cast<int>(missing - seen.begin()) + 1);
        std::sort(anchor.begin(), anchor.end());
    }
    return spec;
}

RankSpec gen_uniform(Rng& rng, int n, long long bound) {
    RankSpec spec;
    spec.type = RankSpec::Type::Uniform;
    spec.uniformN = n;
    spec.uniformR = rng.range(0, std::min<long long>(n, bound));
    return spec;
}

RankSpec gen_graphic(Rng& rng, int n, long long bound) {
    const long long mBound = std::min<long long>(bound, 5);
    const int vertexCount = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(mBound)));
    RankSpec spec;
    spec.type = RankSpec::Type::Graphic;
    spec.vertices = vertexCount;
    for (int e = 0; e < n; ++e) {
        const int u = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(vertexCount)));
        const int v = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(vertexCount)));
        spec.edges.push_back({u, v});
    }
    return spec;
}

RankSpec gen_spec(Rng& rng, int n, long long bound, GeneratorKind kind);

RankSpec gen_base(Rng& rng, int n, long long bound) {
    switch (rng.below(3)) {
        case 0: return gen_hypergraph(rng, n, bound);
        case 1: return gen_uniform(rng, n, bound);
        default: return gen_graphic(rng, n, bound);
    }
}

RankSpec gen_spec(Rng& rng, int n, long long bound, GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::Hypergraph:
            return gen_hypergraph(rng, n, bound);
        case GeneratorKind::Uniform:
            return gen_uniform(rng, n, bound);
        case GeneratorKind::Graphic:
            return gen_graphic(rng, n, bound);
        case GeneratorKind::Dual: {
            RankSpec spec;
            spec.type = RankSpec::Type::Dual;
            spec.children.push_back(gen_base(rng, n, bound));
            return spec;
        }
        case GeneratorKind::Translate: {
            RankSpec spec;
            spec.type = RankSpec::Type::Translate;
            spec.children.push_back(gen_base(rng, n, bound));
            for (int i = 0; i < n; ++i) spec.by.push_back(rng.range(-bound, bound));
            return spec;
        }
        case GeneratorKind::Permute: {
            RankSpec spec;
            spec.type = RankSpec::Type::Permute;
            spec.children.push_back(gen_base(rng, n, bound));
            spec.perm = rng.permutation(n);
            return spec;
        }
        case GeneratorKind::Sum: {
            RankSpec spec;
            spec.type = RankSpec::Type::Sum;
            const long long half = std::max<long long>(1, bound / 2);
            spec.children.push_back(gen_base(rng, n, half));
            spec.children.push_back(gen_base(rng, n, std::max<long long>(1, bound - half)));
            return spec;
        }
        case GeneratorKind::Truncate: {
            RankSpec spec;
            spec.type = RankSpec::Type::Truncate;
            spec.children.push_back(gen_base(rng, n, bound));
            spec.cap = rng.range(0, bound);
            return spec;
        }
        case GeneratorKind::Mixed: {
            static const GeneratorKind concrete[] = {
                GeneratorKind::Hypergraph, GeneratorKind::Uniform,   GeneratorKind::Graphic,
                GeneratorKind::Dual,       GeneratorKind::Translate, GeneratorKind::Permute,
                GeneratorKind::Sum,        GeneratorKind::Truncate,
            };
            return gen_spec(rng, n, bound, concrete[rng.below(8)]);
        }
    }
    throw std::logic_error("unhandled generator kind");
}

}  // namespace

GeneratorKind parse_generator_kind(const std::string& name) {
    for (const auto& entry : kKindNames) {
        if (name == entry.name) return entry.kind;
    }
    throw std::invalid_argument("unknown generator kind: " + name);
}

std::string generator_kind_name(GeneratorKind kind) {
    for (const auto& entry : kKindNames) {
        if (kind == entry.kind) return entry.name;
    }
    throw std::logic_error("unhandled generator kind");
}

std::string instance_spec_id(const InstanceSpec& spec) {
    return "random(kind=" + generator_kind_name(spec.kind) + ",seed=" +
           std::to_string(spec.seed) + ",n=" + std::to_string(spec.n) + ",bound=" +
           std::to_string(spec.rankBound) + ")";
}

Instance random_instance(const InstanceSpec& spec) {
    require_ground_size(spec.n);
    if (spec.rankBound < 1) throw std::invalid_argument("rank bound must be >= 1");
    Rng rng(spec.seed);
    RankSpec recipe = gen_spec(rng, spec.n, spec.rankBound, spec.kind);
    try {
        Polymatroid poly = build_polymatroid(recipe);
        return Instance{std::move(recipe), std::move(poly)};
    } catch (const std::invalid_argument& e) {
        throw std::logic_error(std::string("instance generator produced invalid rank data: ") +
                               e.what());
    }
}

Polymatroid random_polymatroid(const InstanceSpec& spec) { return random_instance(spec).poly; }

}  // namespace pmtutte
