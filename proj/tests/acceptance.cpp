// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
// Usage: acceptance <instance-dir>

#include <pmtutte/instance.hpp>
#include <pmtutte/tutte.hpp>
#include <pmtutte/verify.hpp>

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

using namespace pmtutte;

namespace {

struct Entry {
    std::string id;
    Polymatroid poly;
};

std::vector<Entry> load_explicit_corpus(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<Entry> out;
    for (const auto& file : files) {
        out.push_back({file.filename().string(), parse_instance_file(file.string()).poly});
    }
    for (int n = 1; n <= 6; ++n) {
        for (int r = 0; r <= n; ++r) {
            out.push_back({"uniform(n=" + std::to_string(n) + ",r=" + std::to_string(r) + ")",
                           as_polymatroid(rank_from_uniform_matroid(n, r))});
        }
    }
    return out;
}

std::vector<Entry> make_random_corpus() {
    std::vector<Entry> out;
    for (int n = 3; n <= 6; ++n) {
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
            const InstanceSpec spec{seed, n, GeneratorKind::Mixed, 5};
            out.push_back({instance_spec_id(spec), random_polymatroid(spec)});
        }
    }
    return out;
}

bool require_pass(const CheckReport& report) {
    if (report.passed) return true;
    std::cerr << "  check failed: " << report.name << " on " << report.instanceId << ": "
              << report.witness.dump() << '\n';
    return false;
}

bool fail(const std::string& message) {
    std::cerr << "  " << message << '\n';
    return false;
}

// 1. The three-element worked example, reproduced exactly.
bool golden_worked_example() {
    const Polymatroid p = make_polymatroid(3, {0, 2, 2, 3, 1, 3, 3, 3});
    const BivariatePolynomial jp = jp_polynomial(p);

    // (x+y-1)(y^2 + y + 2xy + x^2)
    const BivariatePolynomial expected =
        BivariatePolynomial::xy1_power(1) *
        testing::poly_from_terms({{0, 2, 1}, {0, 1, 1}, {1, 1, 2}, {2, 0, 1}});
    if (jp != expected) return fail("J mismatch: " + jp.to_string());

    UnivariateRationalPolynomial sliceX;  // J(x,1/3) = x^3 - 8/27
    sliceX.add_term(3, BigRat(1));
    sliceX.add_term(0, BigRat(-8, 27));
    if (specialize_y(jp, BigRat(1, 3)) != sliceX) {
        return fail("J(x,1/3) mismatch: " + specialize_y(jp, BigRat(1, 3)).to_string());
    }

    UnivariateRationalPolynomial sliceY;  // J(0,y) = y^3 - y
    sliceY.add_term(3, BigRat(1));
    sliceY.add_term(1, BigRat(-1));
    if (specialize_x(jp, BigRat(0)) != sliceY) {
        return fail("J(0,y) mismatch: " + specialize_x(jp, BigRat(0)).to_string("y"));
    }

    // The explorer must flag both non-contiguous slices below t = 1 and stay
    // quiet on [1, 4].
    const auto failures = explore_t(p, BigRat(-2), BigRat(5, 6), BigRat(1, 6));
    bool sawThirdX = false;
    bool sawZeroY = false;
    for (const auto& f : failures) {
        if (f.t == BigRat(1, 3) && f.axis == 'x' && f.support == std::vector<int>{0, 3})
            sawThirdX = true;
        if (f.t == BigRat(0) && f.axis == 'y' && f.support == std::vector<int>{1, 3})
            sawZeroY = true;
    }
    if (!sawThirdX) return fail("explorer missed the t=1/3 x-slice failure");
    if (!sawZeroY) return fail("explorer missed the t=0 y-slice failure");
    if (!explore_t(p, BigRat(1), BigRat(4), BigRat(1, 6)).empty()) {
        return fail("explorer reported a failure for t >= 1");
    }
    return true;
}

// 2. Top and next-to-top coefficients of both axis slices.
bool coefficient_formulas(const std::vector<Entry>& corpus) {
    bool ok = true;
    for (const auto& entry : corpus) {
        ok &= require_pass(check_top_coefficient(entry.poly, entry.id));
        ok &= require_pass(check_subtop_coefficients(entry.poly, entry.id));
    }
    return ok;
}

// 3. Contiguous slice support at fixed rational t >= 1.
bool interpolation(const std::vector<Entry>& corpus) {
    const std::vector<BigRat> ts = {BigRat(1),    BigRat(7, 6), BigRat(4, 3),
                                    BigRat(3, 2), BigRat(2),    BigRat(3)};
    bool ok = true;
    for (const auto& entry : corpus) {
        ok &= require_pass(check_interpolating(entry.poly, entry.id, ts));
    }
    return ok;
}

// 4. J(dual) = swap(J); divisibility by x+y-1; translation/relabeling invariance.
bool duality_group(const std::vector<Entry>& corpus) {
    bool ok = true;
    std::uint64_t seed = 1000;
    for (const auto& entry : corpus) {
        ok &= require_pass(check_duality(entry.poly, entry.id));
        ok &= require_pass(check_divisibility(entry.poly, entry.id));
        ok &= require_pass(check_invariance(entry.poly, entry.id, seed++));
    }
    return ok;
}

// 5. Optimized paths agree with brute force everywhere.
bool oracle_equivalence(const std::vector<Entry>& corpus) {
    bool ok = true;
    for (const auto& entry : corpus) {
        const auto bases = enumerate_bases(entry.poly);
        for (const auto& a : bases) {
            if (activity_direct(entry.poly, a) != activity_tight(entry.poly, a)) {
                ok = fail("activity oracle mismatch on " + entry.id);
                break;
            }
            const TightFamily tf = tight_sets(entry.poly, a);
            for (int i = 1; i <= entry.poly.n() && ok; ++i) {
                for (int j = 1; j <= entry.poly.n(); ++j) {
                    if (i == j) continue;
                    BasisVector moved = a;
                    moved[i - 1] += 1;
                    moved[j - 1] -= 1;
                    const bool direct = is_basis(entry.poly, moved);
                    if (is_exchange_feasible(entry.poly, a, i, j) != direct ||
                        is_exchange_feasible(tf, i, j) != direct) {
                        ok = fail("exchange criterion mismatch on " + entry.id);
                        break;
                    }
                }
            }
            if (!ok) break;
        }
        if (const auto volume = testing::box_volume(entry.poly);
            volume && *volume <= 1'000'000) {
            if (bases != testing::box_scan_bases(entry.poly)) {
                ok = fail("box scan mismatch on " + entry.id);
            }
        }
    }
    return ok;
}

// 6. Structural lemmas behind the activity count.
bool activity_lemmas(const std::vector<Entry>& corpus) {
    bool ok = true;
    for (const auto& entry : corpus) {
        ok &= require_pass(check_activity_lemmas(entry.poly, entry.id));
    }
    return ok;
}

// 7. Matroid specialization against the deletion-contraction oracle.
bool matroid_reduction() {
    bool ok = true;
    // Frozen cross-check of the oracle itself.
    if (matroid_tutte(rank_from_uniform_matroid(4, 2)) !=
        testing::poly_from_terms({{2, 0, 1}, {1, 0, 2}, {0, 1, 2}, {0, 2, 1}})) {
        ok = fail("deletion-contraction oracle broke on U(2,4)");
    }
    for (int n = 1; n <= 6; ++n) {
        for (int r = 0; r <= n; ++r) {
            ok &= require_pass(reduction_identity_check(
                rank_from_uniform_matroid(n, r),
                "uniform(n=" + std::to_string(n) + ",r=" + std::to_string(r) + ")"));
        }
    }
    ok &= require_pass(reduction_identity_check(
        rank_from_graphic_matroid(3, {{0, 1}, {1, 2}, {2, 0}}), "cycle3"));
    ok &= require_pass(reduction_identity_check(
        rank_from_graphic_matroid(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), "cycle4"));
    ok &= require_pass(reduction_identity_check(
        rank_from_graphic_matroid(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
        "complete4"));
    return ok;
}

// 8. Linear coefficients of the interior/exterior polynomials of hypergraphs.
bool hypergraph_corollaries() {
    bool ok = true;

    const Hypergraph path{3, {{0, 1}, {1, 2}}};
    const CheckReport pathReport = check_hypergraph_corollaries(path, "path");
    ok &= require_pass(pathReport);  // exterior clause skipped: H - e disconnects

    const Hypergraph triangle{3, {{0, 1}, {1, 2}, {0, 2}}};
    const CheckReport triangleReport = check_hypergraph_corollaries(triangle, "triangle");
    ok &= require_pass(triangleReport);
    if (!triangleReport.note.empty()) ok = fail("triangle skipped the exterior clause");

    const Hypergraph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    const CheckReport k4Report = check_hypergraph_corollaries(k4, "complete4");
    ok &= require_pass(k4Report);
    if (!k4Report.note.empty()) ok = fail("complete4 skipped the exterior clause");

    // 20 seeded random connected hypergraphs that also satisfy the stronger
    // hypothesis (H - e stays connected for every hyperedge e), so both
    // clauses are exercised on every one of them.
    int found = 0;
    for (std::uint64_t seed = 1; seed <= 2000 && found < 20; ++seed) {
        const InstanceSpec spec{seed, 3 + static_cast<int>(seed % 4),
                                GeneratorKind::Hypergraph, 5};
        const Instance inst = random_instance(spec);
        const Hypergraph h = hypergraph_from_spec(inst.spec);
        bool sturdy = true;
        for (int e = 1; e <= h.n() && sturdy; ++e) sturdy = bip_connected(h, e);
        if (!sturdy) continue;
        ++found;
        const CheckReport report = check_hypergraph_corollaries(h, instance_spec_id(spec));
        ok &= require_pass(report);
        if (!report.note.empty())
            ok = fail("exterior clause unexpectedly skipped on " + instance_spec_id(spec));
    }
    if (found < 20) ok = fail("only found " + std::to_string(found) + " sturdy hypergraphs");
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <instance-dir>\n";
        return 2;
    }

    std::vector<Entry> corpus;
    try {
        corpus = load_explicit_corpus(argv[1]);
        const std::vector<Entry> randoms = make_random_corpus();
        corpus.insert(corpus.end(), randoms.begin(), randoms.end());
    } catch (const std::exception& e) {
        std::cerr << "corpus setup failed: " << e.what() << '\n';
        return 2;
    }

    struct Criterion {
        std::string name;
        std::function<bool()> run;
        double limitSeconds;  // 0 = no limit
    };
    const std::vector<Criterion> criteria = {
        {"golden worked example", golden_worked_example, 1.0},
        {"coefficient formulas", [&] { return coefficient_formulas(corpus); }, 300.0},
        {"interpolation for t >= 1", [&] { return interpolation(corpus); }, 0.0},
        {"duality, divisibility, invariance", [&] { return duality_group(corpus); }, 0.0},
        {"oracle equivalence", [&] { return oracle_equivalence(corpus); }, 0.0},
        {"activity lemma suite", [&] { return activity_lemmas(corpus); }, 0.0},
        {"matroid reduction", matroid_reduction, 0.0},
        {"hypergraph corollaries", hypergraph_corollaries, 0.0},
    };

    bool allPassed = true;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        bool passed = false;
        try {
            passed = criteria[k].run();
        } catch (const std::exception& e) {
            std::cerr << "  unexpected exception: " << e.what() << '\n';
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criteria[k].limitSeconds > 0 && elapsed >= criteria[k].limitSeconds) {
            std::cerr << "  exceeded the " << criteria[k].limitSeconds << "s budget\n";
            passed = false;
        }
        std::cout << (passed ? "PASS" : "FAIL") << ' ' << (k + 1) << ". " << criteria[k].name
                  << " (" << std::fixed << std::setprecision(2) << elapsed << "s)\n";
        allPassed &= passed;
    }
    return allPassed ? 0 : 1;
}
