#include "pmtutte/bivariate.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pmtutte {

BivariatePolynomial BivariatePolynomial::constant(const BigInt& c) {
    return monomial(0, 0, c);
}

BivariatePolynomial BivariatePolynomial::monomial(int degX, int degY, const BigInt& c) {
    if (degX < 0 || degY < 0) throw std::invalid_argument("negative degree");
    BivariatePolynomial p;
    if (c != 0) p.terms_[{degX, degY}] = c;
    return p;
}

BivariatePolynomial BivariatePolynomial::xy1_power(int k) {
    if (k < 0) throw std::invalid_argument("negative power of (x+y-1)");
    BivariatePolynomial base;
    base.terms_[{1, 0}] = 1;
    base.terms_[{0, 1}] = 1;
    base.terms_[{0, 0}] = -1;
    BivariatePolynomial result = constant(1);
    for (int step = 0; step < k; ++step) result = result * base;
    return result;
}

BigInt BivariatePolynomial::coeff(int degX, int degY) const {
    const auto it = terms_.find({degX, degY});
    return it == terms_.end() ? BigInt(0) : it->second;
}

int BivariatePolynomial::degree_x() const {
    int d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, key.first);
    return d;
}

int BivariatePolynomial::degree_y() const {
    int d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, key.second);
    return d;
}

int BivariatePolynomial::total_degree() const {
    int d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, key.first + key.second);
    return d;
}

void BivariatePolynomial::add_term(int degX, int degY, const BigInt& c) {
    if (degX < 0 || degY < 0) throw std::invalid_argument("negative degree");
    if (c == 0) return;
    const Key key{degX, degY};
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
    return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

BivariatePolynomial operator*(const BigInt& c, const BivariatePolynomial& p) {
    BivariatePolynomial out;
    if (c == 0) return out;
    for (const auto& [key, coeff] : p.terms_) out.terms_[key] = c * coeff;
    return out;
}

BivariatePolynomial BivariatePolynomial::operator-() const {
    return BigInt(-1) * *this;
}

BigRat BivariatePolynomial::eval(const BigRat& x, const BigRat& y) const {
    const int dx = degree_x(), dy = degree_y();
    std::vector<BigRat> xPow(static_cast<std::size_t>(dx < 0 ? 1 : dx + 1), BigRat(1));
    std::vector<BigRat> yPow(static_cast<std::size_t>(dy < 0 ? 1 : dy + 1), BigRat(1));
    for (std::size_t k = 1; k < xPow.size(); ++k) xPow[k] = xPow[k - 1] * x;
    for (std::size_t k = 1; k < yPow.size(); ++k) yPow[k] = yPow[k - 1] * y;
    BigRat sum(0);
    for (const auto& [key, c] : terms_)
        sum += BigRat(c) * xPow[static_cast<std::size_t>(key.first)] *
               yPow[static_cast<std::size_t>(key.second)];
    return sum;
}

BivariatePolynomial BivariatePolynomial::swap_xy() const {
    BivariatePolynomial out;
    for (const auto& [key, c] : terms_) out.terms_[{key.second, key.first}] = c;
    return out;
}

std::string BivariatePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    // Sort by descending total degree, then descending x-degree.
    std::vector<std::pair<Key, BigInt>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        const int ta = a.first.first + a.first.second;
        const int tb = b.first.first + b.first.second;
        if (ta != tb) return ta > tb;
        return a.first.first > b.first.first;
    });
    std::string out;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        const auto& [key, c] = sorted[k];
        const BigInt mag = abs(c);
        if (k == 0)
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        std::string vars;
        if (key.first > 0) vars += key.first == 1 ? "x" : "x^" + std::to_string(key.first);
        if (key.second > 0) vars += key.second == 1 ? "y" : "y^" + std::to_string(key.second);
        if (vars.empty())
            out += mag.get_str();
        else
            out += (mag == 1 ? "" : mag.get_str()) + vars;
    }
    return out;
}

std::pair<BivariatePolynomial, BivariatePolynomial> divmod_xy1(const BivariatePolynomial& p) {
    BivariatePolynomial divisor = BivariatePolynomial::xy1_power(1);
    BivariatePolynomial quotient;
    BivariatePolynomial remainder = p;
    int d = remainder.degree_x();
    while (d >= 1) {
        // Coefficient of x^d is a polynomial in y; push it down one x-degree.
        BivariatePolynomial chunk;
        for (const auto& [key, c] : remainder.terms())
            if (key.first == d) chunk.add_term(d - 1, key.second, c);
        quotient += chunk;
        remainder -= chunk * divisor;
        d = remainder.degree_x();
    }
    return {quotient, remainder};
}

BivariatePolynomial divide_exact_xy1(const BivariatePolynomial& p) {
    auto [quotient, remainder] = divmod_xy1(p);
    if (!remainder.is_zero())
        throw DivisibilityError("polynomial is not divisible by (x+y-1); remainder " +
                                remainder.to_string());
    return quotient;
}

}  // namespace pmtutte
