#pragma once

#include <gmpxx.h>

#include <string>

namespace pmtutte {

using BigInt = mpz_class;
using BigRat = mpq_class;  // canonical: denominator > 0, lowest terms

// Parses "p" or "p/q" (q != 0); the result is canonicalized.
// Throws std::invalid_argument on malformed input.
BigRat parse_rational(const std::string& text);

// "p" for integers, "p/q" otherwise, canonical form.
std::string format_rational(const BigRat& q);

}  // namespace pmtutte
