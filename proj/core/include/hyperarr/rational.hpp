#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hyperarr {

// Exact rational number. GMP keeps results of arithmetic canonical (reduced,
// positive denominator) as long as the operands are; every constructor and
// parser below canonicalizes explicitly.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p" or "p/q" (decimal-free). Throws ParseError on junk.
Rational rational_from_string(std::string_view text);

// Decimal-free rendering: "3", "-1/2", "0".
std::string rational_to_string(const Rational& q);

}  // namespace hyperarr
