#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace varcalc {

// Exact rational scalar. All coefficient arithmetic in the library is carried
// out in this type; nothing is ever rounded.
using Rational = mpq_class;

// mpq_class does not canonicalize (num, den) constructor arguments, so every
// construction from a numerator/denominator pair goes through here.
inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "num" or "num/den" with an optional leading minus. Throws
// std::invalid_argument on malformed input or a zero denominator.
Rational rational_from_string(const std::string& text);

// "num" when the denominator is 1, "num/den" otherwise.
std::string rational_to_string(const Rational& r);

}  // namespace varcalc
