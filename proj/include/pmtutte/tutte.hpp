#pragma once

#include <pmtutte/basis.hpp>
#include <pmtutte/bivariate.hpp>
#include <pmtutte/errors.hpp>
#include <pmtutte/polymatroid.hpp>
#include <pmtutte/report.hpp>
#include <pmtutte/univariate.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace pmtutte {

// One lattice point of the base polytope together with its activity profile.
struct BasisTerm {
    BasisVector basis;
    ActivityProfile activity;
};

std::vector<BasisTerm> jp_terms(const Polymatroid& p, std::size_t budget = kDefaultBudget);

// J_P(x,y) = sum over bases a of x^oi(a) * y^oe(a) * (x+y-1)^ie(a), where
// oi/oe/ie count the exclusively-internal, exclusively-external and doubly
// active elements of a.
BivariatePolynomial jp_polynomial(const Polymatroid& p, std::size_t budget = kDefaultBudget);

// Interior polynomial I(x), defined by J(x,1) = x^n I(1/x): the coefficient
// of x^k in I is the coefficient of x^{n-k} in J(x,1).
UnivariateRationalPolynomial interior_polynomial(const BivariatePolynomial& jp, int n);
UnivariateRationalPolynomial interior_polynomial(const Polymatroid& p,
                                                 std::size_t budget = kDefaultBudget);

// Exterior polynomial X(y), defined by J(1,y) = y^n X(1/y).
UnivariateRationalPolynomial exterior_polynomial(const BivariatePolynomial& jp, int n);
UnivariateRationalPolynomial exterior_polynomial(const Polymatroid& p,
                                                 std::size_t budget = kDefaultBudget);

// The quotient J_P / (x+y-1), which is always a polynomial with integer
// coefficients; throws DivisibilityError otherwise.
BivariatePolynomial cameron_fink(const BivariatePolynomial& jp);

// Classical Tutte polynomial of a matroid, computed by deletion-contraction
// on the rank oracle.
BivariatePolynomial matroid_tutte(const MatroidOracle& m);

// For a matroid M of rank d on n elements, verifies
//   J_M(x,y) = x^{n-d} y^d T_M((x+y-1)/y, (x+y-1)/x)
// by evaluating both sides on the integer grid {1..n+2}^2, which pins down
// bivariate polynomials of degree at most n in each variable.
CheckReport reduction_identity_check(const MatroidOracle& m, const std::string& instanceId,
                                     std::size_t budget = kDefaultBudget);

}  // namespace pmtutte
