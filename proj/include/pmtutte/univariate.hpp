#pragma once

#include <map>
#include <string>
#include <vector>

#include "pmtutte/bivariate.hpp"
#include "pmtutte/rational.hpp"

namespace pmtutte {

// Exact univariate polynomial with rational coefficients; zero coefficients
// are never stored and every coefficient is canonical (lowest terms, positive
// denominator).
class UnivariateRationalPolynomial {
  public:
    using CoeffMap = std::map<int, BigRat>;

    UnivariateRationalPolynomial() = default;

    bool is_zero() const { return coeffs_.empty(); }
    const CoeffMap& coeffs() const { return coeffs_; }
    BigRat coeff(int degree) const;
    int degree() const;  // -1 for the zero polynomial

    void add_term(int degree, const BigRat& c);

    bool operator==(const UnivariateRationalPolynomial& o) const {
        return coeffs_ == o.coeffs_;
    }

    BigRat eval(const BigRat& t) const;

    // "x^3 - 8/27" style, descending degree.
    std::string to_string(const std::string& var = "x") const;

  private:
    CoeffMap coeffs_;
};

// Exact substitution y := t (resp. x := t), collected by the surviving
// variable's degree.
UnivariateRationalPolynomial specialize_y(const BivariatePolynomial& p, const BigRat& t);
UnivariateRationalPolynomial specialize_x(const BivariatePolynomial& p, const BigRat& t);

struct SupportInfo {
    std::vector<int> degrees;  // ascending, degrees with nonzero coefficient
    bool isInterval = false;
    bool isZero = false;       // zero polynomial: empty support, interval by convention
};

SupportInfo support_info(const UnivariateRationalPolynomial& u);
bool support_is_interval(const UnivariateRationalPolynomial& u);

}  // namespace pmtutte
