#include <pmtutte/tutte.hpp>

#include <pmtutte/rational.hpp>
#include <pmtutte/subsets.hpp>

#include <chrono>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace pmtutte {

std::vector<BasisTerm> jp_terms(const Polymatroid& p, std::size_t budget) {
    std::vector<BasisTerm> terms;
    for (BasisVector& a : enumerate_bases(p, budget)) {
        ActivityProfile profile = activity_tight(p, a);
        terms.push_back(BasisTerm{std::move(a), profile});
    }
    return terms;
}

BivariatePolynomial jp_polynomial(const Polymatroid& p, std::size_t budget) {
    // Tally activity profiles first; the number of distinct (oi,oe,ie)
    // triples is tiny compared to the number of bases.
    std::map<std::tuple<int, int, int>, BigInt> tally;
    for (const BasisTerm& term : jp_terms(p, budget)) {
        const ActivityProfile& ap = term.activity;
        tally[{ap.oi(), ap.oe(), ap.ie()}] += 1;
    }

    BivariatePolynomial jp;
    for (const auto& [profile, count] : tally) {
        const auto& [oi, oe, ie] = profile;
        jp += BivariatePolynomial::monomial(oi, oe, count) * BivariatePolynomial::xy1_power(ie);
    }
    return jp;
}

namespace {

// Reverses the coefficient sequence of J restricted to one axis: with
// onAxis = J(x,1) (or J(1,y)), the degree-k coefficient of the result is the
// degree-(n-k) coefficient of onAxis.
UnivariateRationalPolynomial reverse_at_degree(const UnivariateRationalPolynomial& onAxis, int n) {
    UnivariateRationalPolynomial reversed;
    for (const auto& [degree, coeff] : onAxis.coeffs()) {
        if (degree > n) {
            throw std::logic_error("axis polynomial degree exceeds ground set size");
        }
        reversed.add_term(n - degree, coeff);
    }
    return reversed;
}

}  // namespace

UnivariateRationalPolynomial interior_polynomial(const BivariatePolynomial& jp, int n) {
    return reverse_at_degree(specialize_y(jp, BigRat(1)), n);
}

UnivariateRationalPolynomial interior_polynomial(const Polymatroid& p, std::size_t budget) {
    return interior_polynomial(jp_polynomial(p, budget), p.n());
}

UnivariateRationalPolynomial exterior_polynomial(const BivariatePolynomial& jp, int n) {
    return reverse_at_degree(specialize_x(jp, BigRat(1)), n);
}

UnivariateRationalPolynomial exterior_polynomial(const Polymatroid& p, std::size_t budget) {
    return exterior_polynomial(jp_polynomial(p, budget), p.n());
}

BivariatePolynomial cameron_fink(const BivariatePolynomial& jp) {
    return divide_exact_xy1(jp);
}

namespace {

// Deletion-contraction over minors of m. A minor is described by the set of
// elements still undecided (rest) and the set already contracted; deleted
// elements simply drop out. The minor's rank of A is r(A|C) - r(C).
BivariatePolynomial tutte_rec(const RankFunction& r, SubsetMask rest, SubsetMask contracted) {
    if (rest == 0) {
        return BivariatePolynomial::constant(1);
    }
    const SubsetMask e = rest & (~rest + 1);  // lowest remaining element
    const SubsetMask rest2 = rest & ~e;
    const long long rankC = r(contracted);
    if (r(contracted | e) == rankC) {
        // Loop in the minor: T = y * T(minor \ e).
        return tutte_rec(r, rest2, contracted) * BivariatePolynomial::monomial(0, 1, 1);
    }
    if (r(rest | contracted) - r(rest2 | contracted) == 1) {
        // Coloop in the minor: T = x * T(minor / e).
        return tutte_rec(r, rest2, contracted | e) * BivariatePolynomial::monomial(1, 0, 1);
    }
    return tutte_rec(r, rest2, contracted) + tutte_rec(r, rest2, contracted | e);
}

}  // namespace

BivariatePolynomial matroid_tutte(const MatroidOracle& m) {
    return tutte_rec(m.rank, full_mask(m.n()), 0);
}

CheckReport reduction_identity_check(const MatroidOracle& m, const std::string& instanceId,
                                     std::size_t budget) {
    const auto start = std::chrono::steady_clock::now();
    CheckReport report;
    report.name = "matroid-reduction";
    report.instanceId = instanceId;
    report.passed = true;
    report.witness = nullptr;

    const int n = m.n();
    const long long d = m.matroid_rank();
    const BivariatePolynomial jp = jp_polynomial(as_polymatroid(m), budget);
    const BivariatePolynomial tutte = matroid_tutte(m);

    // Both sides are polynomials of degree at most n in each variable, so
    // agreement on the grid {1..n+2}^2 forces identity.
    for (int gx = 1; gx <= n + 2 && report.passed; ++gx) {
        for (int gy = 1; gy <= n + 2 && report.passed; ++gy) {
            const BigRat x(gx);
            const BigRat y(gy);
            const BigRat lhs = jp.eval(x, y);
            const BigRat shifted = x + y - 1;
            BigRat rhs = tutte.eval(shifted / y, shifted / x);
            for (long long k = 0; k < n - d; ++k) {
                rhs *= x;
            }
            for (long long k = 0; k < d; ++k) {
                rhs *= y;
            }
            if (lhs != rhs) {
                report.passed = false;
                report.witness = {{"x", gx},
                                  {"y", gy},
                                  {"jp", format_rational(lhs)},
                                  {"reduced_tutte", format_rational(rhs)}};
            }
        }
    }

    report.elapsedSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace pmtutte
