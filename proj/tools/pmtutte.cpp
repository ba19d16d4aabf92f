#include <CLI11.hpp>

#include <pmtutte/basis.hpp>
#include <pmtutte/errors.hpp>
#include <pmtutte/instance.hpp>
#include <pmtutte/rank.hpp>
#include <pmtutte/rational.hpp>
#include <pmtutte/report.hpp>
#include <pmtutte/tutte.hpp>
#include <pmtutte/verify.hpp>

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace pmtutte;

// Exit codes: 0 all requested checks pass, 1 check failure, 2 input error,
// 3 resource budget exceeded.
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

std::size_t budget_from_env() {
    const char* env = std::getenv("PMTUTTE_BUDGET");
    if (env == nullptr || *env == '\0') return kDefaultBudget;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
        throw std::invalid_argument("PMTUTTE_BUDGET must be a positive integer");
    }
    return static_cast<std::size_t>(v);
}

std::string instance_id_from_path(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

const char* axiom_name(Axiom axiom) {
    switch (axiom) {
        case Axiom::ZeroAtEmpty: return "zero-at-empty";
        case Axiom::Monotone: return "monotone";
        case Axiom::Submodular: return "submodular";
    }
    return "?";
}

int run_validate(const std::string& file) {
    const auto [n, spec] = parse_instance_spec_file(file);
    RankFunction raw;
    raw.n = n;
    raw.values = spec_rank_table(spec);
    const ValidationReport report = validate_rank_function(raw);

    nlohmann::ordered_json out;
    out["instance"] = instance_id_from_path(file);
    out["valid"] = report.valid();
    out["zero_at_empty"] = report.zeroAtEmpty;
    out["submodular"] = report.submodular;
    out["monotone"] = report.monotone;
    out["violations"] = report.witnesses.size();
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
    constexpr std::size_t kMaxListed = 20;
    for (std::size_t k = 0; k < report.witnesses.size() && k < kMaxListed; ++k) {
        const AxiomWitness& w = report.witnesses[k];
        witnesses.push_back({{"axiom", axiom_name(w.axiom)},
                             {"lhs", subset_to_string(w.lhs)},
                             {"rhs", subset_to_string(w.rhs)}});
    }
    out["witnesses"] = std::move(witnesses);
    std::cout << out.dump(2) << '\n';
    return report.valid() ? kExitOk : kExitCheckFailed;
}

int run_bases(const std::string& file, bool withActivities, std::size_t budget) {
    const Instance inst = parse_instance_file(file);
    if (!withActivities) {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const BasisVector& a : enumerate_bases(inst.poly, budget)) out.push_back(a);
        std::cout << out.dump() << '\n';
        return kExitOk;
    }
    for (const BasisTerm& term : jp_terms(inst.poly, budget)) {
        nlohmann::ordered_json line;
        line["basis"] = term.basis;
        line["internal"] = subset_elements(term.activity.internal);
        line["external"] = subset_elements(term.activity.external);
        line["oi"] = term.activity.oi();
        line["oe"] = term.activity.oe();
        line["ie"] = term.activity.ie();
        std::cout << line.dump() << '\n';
    }
    return kExitOk;
}

int run_jp(const std::string& file, bool factor, bool pretty, std::size_t budget) {
    const Instance inst = parse_instance_file(file);
    BivariatePolynomial poly = jp_polynomial(inst.poly, budget);
    if (factor) poly = cameron_fink(poly);
    if (pretty) {
        std::cout << poly.to_string() << '\n';
    } else {
        std::cout << poly_to_json(poly).dump() << '\n';
    }
    return kExitOk;
}

int run_axis_polynomial(const std::string& file, bool exterior, bool asJson, std::size_t budget) {
    const Instance inst = parse_instance_file(file);
    const BivariatePolynomial jp = jp_polynomial(inst.poly, budget);
    const UnivariateRationalPolynomial poly = exterior
                                                  ? exterior_polynomial(jp, inst.n())
                                                  : interior_polynomial(jp, inst.n());
    if (asJson) {
        std::cout << poly_to_json(poly).dump() << '\n';
    } else {
        std::cout << poly.to_string(exterior ? "y" : "x") << '\n';
    }
    return kExitOk;
}

int run_specialize(const std::string& file, const std::string& xValue,
                   const std::string& yValue, bool asJson, std::size_t budget) {
    if (xValue.empty() == yValue.empty()) {
        throw std::invalid_argument("specialize needs exactly one of --x or --y");
    }
    const Instance inst = parse_instance_file(file);
    const BivariatePolynomial jp = jp_polynomial(inst.poly, budget);
    UnivariateRationalPolynomial slice;
    std::string var;
    if (!yValue.empty()) {
        slice = specialize_y(jp, parse_rational(yValue));
        var = "x";
    } else {
        slice = specialize_x(jp, parse_rational(xValue));
        var = "y";
    }
    if (asJson) {
        std::cout << poly_to_json(slice).dump() << '\n';
    } else {
        std::cout << slice.to_string(var) << '\n';
    }
    return kExitOk;
}

std::vector<CheckReport> run_suite(const Instance& inst, const std::string& id,
                                   const std::string& suite, std::uint64_t seed,
                                   std::size_t budget) {
    const bool all = suite == "all";
    std::vector<CheckReport> reports;
    if (all || suite == "coeffs") {
        reports.push_back(check_top_coefficient(inst.poly, id, budget));
        reports.push_back(check_subtop_coefficients(inst.poly, id, budget));
    }
    if (all || suite == "duality") {
        reports.push_back(check_duality(inst.poly, id, budget));
        reports.push_back(check_divisibility(inst.poly, id, budget));
        reports.push_back(check_invariance(inst.poly, id, seed, budget));
    }
    if (all || suite == "interp") {
        reports.push_back(
            check_interpolating(inst.poly, id, default_interpolation_grid(), true, budget));
    }
    if (all || suite == "lemmas") {
        reports.push_back(check_activity_lemmas(inst.poly, id, budget));
    }
    const bool isHypergraph = inst.spec.type == RankSpec::Type::Hypergraph;
    if (suite == "hypergraph" || (all && isHypergraph)) {
        if (isHypergraph) {
            reports.push_back(
                check_hypergraph_corollaries(hypergraph_from_spec(inst.spec), id, budget));
        } else {
            CheckReport skip;
            skip.name = "hypergraph-linear-coefficients";
            skip.instanceId = id;
            skip.passed = true;
            skip.witness = nullptr;
            skip.note = "skipped: not a hypergraph instance";
            reports.push_back(skip);
        }
    }
    return reports;
}

int emit_reports(const std::vector<CheckReport>& reports, bool timings) {
    std::size_t failed = 0;
    for (const CheckReport& r : reports) {
        std::cout << report_to_json(r, timings).dump() << '\n';
        if (!r.passed) ++failed;
    }
    std::cout << '\n';
    std::cout << std::left << std::setw(34) << "check" << std::setw(42) << "instance"
              << "result" << '\n';
    for (const CheckReport& r : reports) {
        std::cout << std::left << std::setw(34) << r.name << std::setw(42) << r.instanceId
                  << (r.passed ? "pass" : "FAIL");
        if (!r.note.empty()) std::cout << "  (" << r.note << ')';
        std::cout << '\n';
    }
    std::cout << reports.size() << " checks, " << (reports.size() - failed) << " passed, "
              << failed << " failed" << '\n';
    return failed == 0 ? kExitOk : kExitCheckFailed;
}

int run_verify(const std::string& file, const std::string& suite, std::uint64_t seed,
               bool timings, std::size_t budget) {
    const Instance inst = parse_instance_file(file);
    return emit_reports(run_suite(inst, instance_id_from_path(file), suite, seed, budget),
                        timings);
}

int run_explore(const std::string& file, const std::string& tMin, const std::string& tMax,
                const std::string& step, std::size_t budget) {
    const Instance inst = parse_instance_file(file);
    const std::vector<InterpolationFailure> failures =
        explore_t(inst.poly, parse_rational(tMin), parse_rational(tMax), parse_rational(step),
                  budget);
    for (const InterpolationFailure& f : failures) {
        nlohmann::ordered_json line;
        line["t"] = format_rational(f.t);
        line["axis"] = std::string(1, f.axis);
        line["support"] = f.support;
        std::cout << line.dump() << '\n';
    }
    std::cerr << failures.size() << " non-contiguous slice(s) found\n";
    return kExitOk;
}

int run_random(std::uint64_t seed, int n, const std::string& kindName, int count,
               long long rankBound, const std::string& suite, bool emit, std::uint64_t checkSeed,
               bool timings, std::size_t budget) {
    const GeneratorKind kind = parse_generator_kind(kindName);
    std::vector<CheckReport> reports;
    for (int k = 0; k < count; ++k) {
        InstanceSpec spec;
        spec.seed = seed + static_cast<std::uint64_t>(k);
        spec.n = n;
        spec.kind = kind;
        spec.rankBound = rankBound;
        const Instance inst = random_instance(spec);
        if (emit || suite.empty()) {
            std::cout << instance_to_json(inst).dump() << '\n';
        }
        if (!suite.empty()) {
            const std::vector<CheckReport> batch =
                run_suite(inst, instance_spec_id(spec), suite, checkSeed, budget);
            reports.insert(reports.end(), batch.begin(), batch.end());
        }
    }
    if (!suite.empty()) return emit_reports(reports, timings);
    return kExitOk;
}

int run_tutte_check(const std::string& file, bool timings, std::size_t budget) {
    const Instance inst = parse_instance_file(file);
    if (!matroid_axioms_ok(inst.poly.rank)) {
        throw std::invalid_argument(file + ": not a matroid rank function (needs f(I) <= |I| " +
                                    "and unit increments); tutte-check applies to matroids only");
    }
    const MatroidOracle oracle{inst.poly.rank};
    const CheckReport report =
        reduction_identity_check(oracle, instance_id_from_path(file), budget);
    std::cout << report_to_json(report, timings).dump() << '\n';
    return report.passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact polymatroid Tutte polynomial toolkit"};
    app.require_subcommand(1);

    std::size_t budget = 0;  // resolved after parsing: flag > env > default
    bool timings = false;
    auto* budgetOpt = app.add_option("--budget", budget,
                                     "Cap on enumerated bases (default: PMTUTTE_BUDGET or 10^6)");
    app.add_flag("--timings", timings, "Include elapsed seconds in reports (non-deterministic)");

    std::string file;
    bool withActivities = false;
    bool factor = false;
    bool pretty = false;
    bool asJson = false;
    std::string xValue;
    std::string yValue;
    std::string suite = "all";
    std::uint64_t verifySeed = 0;
    std::string tMin = "-2";
    std::string tMax = "4";
    std::string step = "1/6";
    std::uint64_t seed = 0;
    int randomN = 4;
    std::string kindName = "mixed";
    int count = 1;
    long long rankBound = 5;
    std::string randomSuite;
    bool emit = false;

    auto* validateCmd = app.add_subcommand("validate", "Check the rank-function axioms");
    validateCmd->add_option("instance", file, "Instance file")->required();

    auto* basesCmd = app.add_subcommand("bases", "Enumerate the lattice points of the base polytope");
    basesCmd->add_option("instance", file, "Instance file")->required();
    basesCmd->add_flag("--activities", withActivities,
                       "Per-basis activity log, one JSON object per line");

    auto* jpCmd = app.add_subcommand("jp", "Compute J(x,y)");
    jpCmd->add_option("instance", file, "Instance file")->required();
    jpCmd->add_flag("--factor", factor, "Print J/(x+y-1) instead of J");
    jpCmd->add_flag("--pretty", pretty, "Human-readable polynomial instead of JSON triples");

    auto* cfCmd = app.add_subcommand("cf", "Compute the quotient J/(x+y-1)");
    cfCmd->add_option("instance", file, "Instance file")->required();
    cfCmd->add_flag("--pretty", pretty, "Human-readable polynomial instead of JSON triples");

    auto* interiorCmd = app.add_subcommand("interior", "Interior polynomial I(x)");
    interiorCmd->add_option("instance", file, "Instance file")->required();
    interiorCmd->add_flag("--json", asJson, "JSON [degree, coefficient] pairs");

    auto* exteriorCmd = app.add_subcommand("exterior", "Exterior polynomial X(y)");
    exteriorCmd->add_option("instance", file, "Instance file")->required();
    exteriorCmd->add_flag("--json", asJson, "JSON [degree, coefficient] pairs");

    auto* specializeCmd = app.add_subcommand("specialize", "One-variable slice of J");
    specializeCmd->add_option("instance", file, "Instance file")->required();
    specializeCmd->add_option("--x", xValue, "Fix x to this rational (p or p/q)");
    specializeCmd->add_option("--y", yValue, "Fix y to this rational (p or p/q)");
    specializeCmd->add_flag("--json", asJson, "JSON [degree, coefficient] pairs");

    auto* verifyCmd = app.add_subcommand("verify", "Run theorem checks against an instance");
    verifyCmd->add_option("instance", file, "Instance file")->required();
    verifyCmd->add_option("--suite", suite, "all|duality|coeffs|interp|lemmas|hypergraph")
        ->check(CLI::IsMember({"all", "duality", "coeffs", "interp", "lemmas", "hypergraph"}));
    verifyCmd->add_option("--seed", verifySeed, "Seed for the random transformations");

    auto* exploreCmd = app.add_subcommand("explore", "Scan a t grid for non-contiguous slices");
    exploreCmd->add_option("instance", file, "Instance file")->required();
    exploreCmd->add_option("--t-min", tMin, "Grid start (rational)");
    exploreCmd->add_option("--t-max", tMax, "Grid end (rational)");
    exploreCmd->add_option("--step", step, "Grid step (positive rational)");

    auto* randomCmd = app.add_subcommand("random", "Generate seeded random instances");
    randomCmd->add_option("--seed", seed, "Base seed; instance k uses seed+k")->required();
    randomCmd->add_option("--n", randomN, "Ground set size")->check(CLI::Range(1, 20));
    randomCmd->add_option("--kind", kindName,
                          "hypergraph|uniform|graphic|dual|translate|permute|sum|truncate|mixed");
    randomCmd->add_option("--count", count, "Number of instances")->check(CLI::PositiveNumber);
    randomCmd->add_option("--rank-bound", rankBound, "Magnitude bound for generated ranks")
        ->check(CLI::PositiveNumber);
    randomCmd->add_option("--suite", randomSuite,
                          "Run this verify suite on each generated instance")
        ->check(CLI::IsMember({"all", "duality", "coeffs", "interp", "lemmas", "hypergraph"}));
    randomCmd->add_flag("--emit", emit, "Print each instance as JSON (default when no --suite)");
    randomCmd->add_option("--check-seed", verifySeed, "Seed for the random transformations");

    auto* tutteCmd = app.add_subcommand("tutte-check",
                                        "Verify J against the classical Tutte polynomial");
    tutteCmd->add_option("instance", file, "Matroid instance file")->required();

    // Let --budget / --timings appear after the subcommand name too.
    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (!budgetOpt->count()) budget = budget_from_env();
        if (budget == 0) throw std::invalid_argument("budget must be positive");

        if (validateCmd->parsed()) return run_validate(file);
        if (basesCmd->parsed()) return run_bases(file, withActivities, budget);
        if (jpCmd->parsed()) return run_jp(file, factor, pretty, budget);
        if (cfCmd->parsed()) return run_jp(file, true, pretty, budget);
        if (interiorCmd->parsed()) return run_axis_polynomial(file, false, asJson, budget);
        if (exteriorCmd->parsed()) return run_axis_polynomial(file, true, asJson, budget);
        if (specializeCmd->parsed()) return run_specialize(file, xValue, yValue, asJson, budget);
        if (verifyCmd->parsed()) return run_verify(file, suite, verifySeed, timings, budget);
        if (exploreCmd->parsed()) return run_explore(file, tMin, tMax, step, budget);
        if (randomCmd->parsed()) {
            return run_random(seed, randomN, kindName, count, rankBound, randomSuite, emit,
                              verifySeed, timings, budget);
        }
        if (tutteCmd->parsed()) return run_tutte_check(file, timings, budget);
        std::cerr << "no subcommand selected\n";
        return kExitInputError;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
}
