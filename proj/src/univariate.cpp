#include "pmtutte/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace pmtutte {

BigRat UnivariateRationalPolynomial::coeff(int degree) const {
    const auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? BigRat(0) : it->second;
}

int UnivariateRationalPolynomial::degree() const {
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

void UnivariateRationalPolynomial::add_term(int degree, const BigRat& c) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    // mpq_class does not canonicalize two-argument constructions on its own,
    // and map equality relies on canonical coefficients.
    BigRat canonical(c);
    canonical.canonicalize();
    if (canonical == 0) return;
    auto [it, inserted] = coeffs_.emplace(degree, canonical);
    if (!inserted) {
        it->second += canonical;
        if (it->second == 0) coeffs_.erase(it);
    }
}

BigRat UnivariateRationalPolynomial::eval(const BigRat& t) const {
    // Horner over the stored degrees, descending.
    BigRat acc(0);
    int lastDegree = -1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (lastDegree >= 0)
            for (int k = 0; k < lastDegree - it->first; ++k) acc *= t;
        acc += it->second;
        lastDegree = it->first;
    }
    if (lastDegree > 0)
        for (int k = 0; k < lastDegree; ++k) acc *= t;
    return acc;
}

std::string UnivariateRationalPolynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const int deg = it->first;
        const BigRat& c = it->second;
        BigRat mag = abs(c);
        if (first)
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        first = false;
        std::string varPart;
        if (deg == 1) varPart = var;
        else if (deg > 1) varPart = var + "^" + std::to_string(deg);
        if (varPart.empty())
            out += format_rational(mag);
        else
            out += (mag == 1 ? "" : format_rational(mag)) + varPart;
    }
    return out;
}

UnivariateRationalPolynomial specialize_y(const BivariatePolynomial& p, const BigRat& t) {
    const int dy = p.degree_y();
    std::vector<BigRat> tPow(static_cast<std::size_t>(dy < 0 ? 1 : dy + 1), BigRat(1));
    for (std::size_t k = 1; k < tPow.size(); ++k) tPow[k] = tPow[k - 1] * t;
    UnivariateRationalPolynomial out;
    for (const auto& [key, c] : p.terms())
        out.add_term(key.first, BigRat(c) * tPow[static_cast<std::size_t>(key.second)]);
    return out;
}

UnivariateRationalPolynomial specialize_x(const BivariatePolynomial& p, const BigRat& t) {
    return specialize_y(p.swap_xy(), t);
}

SupportInfo support_info(const UnivariateRationalPolynomial& u) {
    SupportInfo info;
    for (const auto& [deg, c] : u.coeffs()) info.degrees.push_back(deg);
    info.isZero = info.degrees.empty();
    info.isInterval =
        info.isZero ||
        info.degrees.back() - info.degrees.front() + 1 == static_cast<int>(info.degrees.size());
    return info;
}

bool support_is_interval(const UnivariateRationalPolynomial& u) {
    return support_info(u).isInterval;
}

}  // namespace pmtutte
