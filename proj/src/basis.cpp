#include "pmtutte/basis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pmtutte {

namespace {

// Subset sums of x over all masks, by lowest-bit recursion.
std::vector<long long> subset_sums(int n, const BasisVector& x) {
    const std::size_t size = std::size_t{1} << n;
    std::vector<long long> sums(size, 0);
    for (SubsetMask s = 1; s < size; ++s)
        sums[s] = sums[s & (s - 1)] + x[std::countr_zero(s)];
    return sums;
}

void check_vector_length(const Polymatroid& p, const BasisVector& x) {
    if (static_cast<int>(x.size()) != p.n())
        throw std::invalid_argument("vector length does not match ground size");
}

BasisVector with_exchange(const BasisVector& a, int i, int j) {
    BasisVector b = a;
    b[i - 1] += 1;
    b[j - 1] -= 1;
    return b;
}

}  // namespace

bool is_basis(const Polymatroid& p, const BasisVector& x) {
    check_vector_length(p, x);
    const RankFunction& f = p.rank;
    const std::vector<long long> sums = subset_sums(f.n, x);
    if (sums[f.full()] != f.total()) return false;
    for (SubsetMask s = 1; s < sums.size(); ++s)
        if (sums[s] > f(s)) return false;
    return true;
}

std::vector<BasisVector> enumerate_bases(const Polymatroid& p, std::size_t budget) {
    const RankFunction& f = p.rank;
    const int n = f.n;
    const SubsetMask full = f.full();
    const long long total = f.total();

    // Coordinate i (1-based) can only take values in [lower, upper]:
    // a_i <= f({i}) directly, and a_i = total - sum(rest) >= total - f([n]\{i}).
    std::vector<long long> lower(n), upper(n);
    for (int i = 1; i <= n; ++i) {
        lower[i - 1] = total - f(full ^ element_bit(i));
        upper[i - 1] = f(element_bit(i));
    }
    std::vector<long long> lowerSuffix(n + 1, 0), upperSuffix(n + 1, 0);
    for (int d = n - 1; d >= 0; --d) {
        lowerSuffix[d] = lowerSuffix[d + 1] + lower[d];
        upperSuffix[d] = upperSuffix[d + 1] + upper[d];
    }

    std::vector<long long> sums(std::size_t{1} << n, 0);
    BasisVector a(n, 0);
    std::vector<BasisVector> out;

    // Depth d assigns element d+1; masks < 2^d hold valid prefix sums.
    auto dfs = [&](auto&& self, int d, long long sumSoFar) -> void {
        if (d == n) {
            if (out.size() >= budget)
                throw BudgetExceeded("basis enumeration exceeded budget of " +
                                     std::to_string(budget));
            out.push_back(a);
            return;
        }
        // The remaining coordinates must be able to reach the total exactly.
        long long lo = std::max(lower[d], total - sumSoFar - upperSuffix[d + 1]);
        long long hi = std::min(upper[d], total - sumSoFar - lowerSuffix[d + 1]);
        const SubsetMask bit = SubsetMask{1} << d;
        for (long long v = lo; v <= hi; ++v) {
            bool feasible = true;
            // Every subset with maximum element d+1 is m | bit for m < 2^d.
            for (SubsetMask m = 0; m < bit; ++m) {
                const long long s = sums[m] + v;
                if (s > f(m | bit)) { feasible = false; break; }
                sums[m | bit] = s;
            }
            if (!feasible) continue;
            a[d] = v;
            self(self, d + 1, sumSoFar + v);
        }
    };
    dfs(dfs, 0, 0);

    if (out.empty())
        throw std::logic_error("basis enumeration produced an empty set; "
                               "the rank function is corrupt");
    return out;
}

TightFamily tight_sets(const Polymatroid& p, const BasisVector& a) {
    check_vector_length(p, a);
    const RankFunction& f = p.rank;
    const std::vector<long long> sums = subset_sums(f.n, a);
    if (sums[f.full()] != f.total())
        throw std::invalid_argument("not a basis: coordinate total differs from f([n])");

    TightFamily tf;
    tf.n = f.n;
    tf.member.assign(sums.size(), false);
    for (SubsetMask s = 0; s < sums.size(); ++s) {
        if (sums[s] > f(s))
            throw std::invalid_argument("not a basis: violates the inequality at " +
                                        subset_to_string(s));
        if (sums[s] == f(s)) {
            tf.sets.push_back(s);
            tf.member[s] = true;
        }
    }
    for (std::size_t x = 0; x < tf.sets.size(); ++x)
        for (std::size_t y = x + 1; y < tf.sets.size(); ++y) {
            const SubsetMask u = tf.sets[x] | tf.sets[y];
            const SubsetMask i = tf.sets[x] & tf.sets[y];
            if (!tf.member[u] || !tf.member[i])
                throw std::logic_error("tight family is not lattice-closed at " +
                                       subset_to_string(tf.sets[x]) + ", " +
                                       subset_to_string(tf.sets[y]));
        }
    return tf;
}

bool is_exchange_feasible(const TightFamily& tf, int i, int j) {
    if (i == j) throw std::invalid_argument("exchange needs distinct indices");
    const SubsetMask iBit = element_bit(i);
    const SubsetMask jBit = element_bit(j);
    for (SubsetMask s : tf.sets)
        if ((s & iBit) != 0 && (s & jBit) == 0) return false;
    return true;
}

bool is_exchange_feasible(const Polymatroid& p, const BasisVector& a, int i, int j) {
    return is_exchange_feasible(tight_sets(p, a), i, j);
}

ActivityProfile activity_direct(const Polymatroid& p, const BasisVector& a) {
    check_vector_length(p, a);
    ActivityProfile profile;
    for (int i = 1; i <= p.n(); ++i) {
        bool internallyActive = true;
        bool externallyActive = true;
        for (int j = 1; j < i && (internallyActive || externallyActive); ++j) {
            if (internallyActive && is_basis(p, with_exchange(a, j, i)))
                internallyActive = false;  // a - e_i + e_j in PB
            if (externallyActive && is_basis(p, with_exchange(a, i, j)))
                externallyActive = false;  // a + e_i - e_j in PB
        }
        if (internallyActive) profile.internal |= element_bit(i);
        if (externallyActive) profile.external |= element_bit(i);
    }
    return profile;
}

ActivityProfile activity_tight(const TightFamily& tf) {
    ActivityProfile profile;
    // Externally active: some tight set has minimum element i.
    for (SubsetMask s : tf.sets)
        if (s != 0) profile.external |= element_bit(min_element(s));
    // Internally active: some tight set contains [i-1] and avoids i; by union
    // closure it suffices to look at the union of all tight sets avoiding i.
    for (int i = 1; i <= tf.n; ++i) {
        SubsetMask unionAvoiding = 0;
        const SubsetMask iBit = element_bit(i);
        for (SubsetMask s : tf.sets)
            if ((s & iBit) == 0) unionAvoiding |= s;
        if ((unionAvoiding & prefix_mask(i - 1)) == prefix_mask(i - 1))
            profile.internal |= iBit;
    }
    return profile;
}

ActivityProfile activity_tight(const Polymatroid& p, const BasisVector& a) {
    return activity_tight(tight_sets(p, a));
}

BasisVector lex_max_basis(const Polymatroid& p) {
    const RankFunction& f = p.rank;
    BasisVector a(f.n);
    for (int k = 1; k <= f.n; ++k)
        a[k - 1] = f(prefix_mask(k)) - f(prefix_mask(k - 1));
    if (!is_basis(p, a))
        throw std::logic_error("greedy basis is not in PB; the rank function is corrupt");
    if (activity_tight(p, a).iota() != f.n)
        throw std::logic_error("greedy basis does not have full internal activity");
    return a;
}

}  // namespace pmtutte
