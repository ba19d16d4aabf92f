#pragma once

#include <map>
#include <string>
#include <utility>

#include "pmtutte/errors.hpp"
#include "pmtutte/rational.hpp"

namespace pmtutte {

// Exact bivariate polynomial over the integers. Terms are kept canonical:
// no zero coefficients are ever stored, so map equality is polynomial
// equality.
class BivariatePolynomial {
  public:
    using Key = std::pair<int, int>;  // (degX, degY)
    using TermMap = std::map<Key, BigInt>;

    BivariatePolynomial() = default;

    static BivariatePolynomial constant(const BigInt& c);
    static BivariatePolynomial monomial(int degX, int degY, const BigInt& c = 1);
    // (x + y - 1)^k, exact trinomial expansion.
    static BivariatePolynomial xy1_power(int k);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    BigInt coeff(int degX, int degY) const;
    int degree_x() const;      // -1 for the zero polynomial
    int degree_y() const;
    int total_degree() const;

    void add_term(int degX, int degY, const BigInt& c);

    BivariatePolynomial& operator+=(const BivariatePolynomial& o);
    BivariatePolynomial& operator-=(const BivariatePolynomial& o);
    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
        a += b;
        return a;
    }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) {
        a -= b;
        return a;
    }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                         const BivariatePolynomial& b);
    friend BivariatePolynomial operator*(const BigInt& c, const BivariatePolynomial& p);
    BivariatePolynomial operator-() const;

    bool operator==(const BivariatePolynomial& o) const { return terms_ == o.terms_; }

    BigRat eval(const BigRat& x, const BigRat& y) const;
    BivariatePolynomial swap_xy() const;

    // Descending total degree, then descending x-degree, e.g.
    // "x^3 + 3x^2y + 3xy^2 + y^3 - x^2 - xy - y".
    std::string to_string() const;

  private:
    TermMap terms_;
};

// Long division by (x + y - 1), treating the input as a polynomial in x over
// Z[y]; the divisor is monic in x, so quotient and remainder stay integral.
// The remainder has x-degree <= 0.
std::pair<BivariatePolynomial, BivariatePolynomial> divmod_xy1(const BivariatePolynomial& p);

// Exact quotient p / (x + y - 1); throws DivisibilityError on a nonzero
// remainder.
BivariatePolynomial divide_exact_xy1(const BivariatePolynomial& p);

}  // namespace pmtutte
