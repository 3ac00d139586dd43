#ifndef QH_RATIONAL_HPP
#define QH_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace qh {

// Exact rational scalars.  All coefficient and exponent arithmetic in the
// library is over these; no floating point anywhere.
using Rational = mpq_class;

// Parses "p", "-p/q" or "p/q" (whitespace-trimmed).  Throws ParseError on
// malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& r);

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// r^k for integer k (k < 0 requires r != 0).
Rational pow(const Rational& r, long k);

} // namespace qh

#endif
