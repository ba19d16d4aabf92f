#include "pmtutte/rational.hpp"

#include <stdexcept>

namespace pmtutte {

namespace {

BigInt parse_integer(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("sign without digits: " + text);
    for (std::size_t k = start; k < text.size(); ++k)
        if (text[k] < '0' || text[k] > '9')
            throw std::invalid_argument("malformed integer literal: " + text);
    return BigInt(text, 10);
}

}  // namespace

BigRat parse_rational(const std::string& text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos) return BigRat(parse_integer(text));
    const BigInt num = parse_integer(text.substr(0, slash));
    const BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

std::string format_rational(const BigRat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace pmtutte
