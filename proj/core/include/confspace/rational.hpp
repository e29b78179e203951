#ifndef CONFSPACE_RATIONAL_HPP
#define CONFSPACE_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

#include "confspace/errors.hpp"

namespace confspace {

/// Exact rational scalar. Backed by GMP; always stored canonically
/// (gcd(|num|, den) = 1, den >= 1, zero is 0/1).
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "3", "-3", "3/4", "-3/4". Whitespace is not accepted.
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    for (char c : s)
        if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
            throw ParseError("bad rational literal '" + s + "'");
    Rat q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) {
    return q.get_str();
}

} // namespace confspace

#endif
