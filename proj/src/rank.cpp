#include "pmtutte/rank.hpp"

#include <stdexcept>
#include <string>

namespace pmtutte {

ValidationReport validate_rank_function(const RankFunction& rf) {
    const int n = rf.n;
    require_ground_size(n);
    const std::size_t size = std::size_t{1} << n;
    if (rf.values.size() != size)
        throw std::invalid_argument("rank table has " + std::to_string(rf.values.size()) +
                                    " entries, expected 2^" + std::to_string(n));

    ValidationReport report;
    report.zeroAtEmpty = rf.values[0] == 0;
    if (!report.zeroAtEmpty) report.witnesses.push_back({Axiom::ZeroAtEmpty, 0, 0});

    report.monotone = true;
    // All nested pairs I <= J, via J and its submasks.
    for (SubsetMask j = 0; j < size; ++j) {
        for (SubsetMask i = j; ; i = (i - 1) & j) {
            if (rf.values[i] > rf.values[j]) {
                report.monotone = false;
                report.witnesses.push_back({Axiom::Monotone, i, j});
            }
            if (i == 0) break;
        }
    }

    report.submodular = true;
    for (SubsetMask i = 0; i < size; ++i) {
        for (SubsetMask j = i; j < size; ++j) {
            if (rf.values[i] + rf.values[j] < rf.values[i | j] + rf.values[i & j]) {
                report.submodular = false;
                report.witnesses.push_back({Axiom::Submodular, i, j});
            }
        }
    }
    return report;
}

RankFunction make_rank_function(int n, std::vector<long long> values) {
    RankFunction rf{n, std::move(values), false};
    ValidationReport report = validate_rank_function(rf);
    if (!report.valid()) {
        std::string what = "invalid rank function:";
        if (!report.zeroAtEmpty) what += " f(empty) != 0;";
        if (!report.submodular) {
            const AxiomWitness* w = nullptr;
            for (const auto& cand : report.witnesses)
                if (cand.axiom == Axiom::Submodular) { w = &cand; break; }
            what += " submodularity fails at I=" + subset_to_string(w->lhs) +
                    ", J=" + subset_to_string(w->rhs) + ";";
        }
        throw std::invalid_argument(what);
    }
    rf.monotone = report.monotone;
    return rf;
}

bool matroid_axioms_ok(const RankFunction& rf) {
    const std::size_t size = std::size_t{1} << rf.n;
    for (SubsetMask i = 0; i < size; ++i) {
        if (rf.values[i] < 0 || rf.values[i] > mask_size(i)) return false;
        for (int e = 1; e <= rf.n; ++e) {
            if (mask_contains(i, e)) continue;
            const long long with = rf.values[i | element_bit(e)];
            if (with < rf.values[i] || with > rf.values[i] + 1) return false;
        }
    }
    return true;
}

}  // namespace pmtutte
