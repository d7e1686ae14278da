// Exact rational scalars. All arithmetic in the library is exact; there is no
// floating point anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "donaldson/error.hpp"

namespace donaldson {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int integer_value(const Rat& r) {
    if (!is_integer(r)) fail(ErrorKind::precondition, "expected an integer, got " + r.str());
    return numerator(r);
}

inline bool is_odd(const Int& n) { return (n % 2) != 0; }
inline bool is_odd(const Rat& r) { return is_odd(integer_value(r)); }
inline bool is_even(const Rat& r) { return !is_odd(r); }

// Value mod 4 in {0,1,2,3}; requires an integer.
inline int mod4(const Rat& r) {
    Int m = integer_value(r) % 4;
    if (m < 0) m += 4;
    return static_cast<int>(m);
}

inline long to_long(const Rat& r) {
    Int n = integer_value(r);
    if (n > std::numeric_limits<long>::max() || n < std::numeric_limits<long>::min())
        fail(ErrorKind::internal, "integer out of range: " + n.str());
    return static_cast<long>(n);
}

// Strict "p" or "p/q" with optional leading '-'; the only accepted spelling in
// manifests, so that no float notation can sneak in.
Rat rat_from_string(const std::string& text);

// Lowest terms, positive denominator: "p" when the denominator is 1, "p/q" otherwise.
std::string rat_to_string(const Rat& r);

Rat rat_pow(const Rat& base, unsigned exponent);
Rat factorial(unsigned n);

// (-1)^e for an exact integer exponent (possibly negative).
inline Rat minus_one_pow(const Rat& e) { return is_odd(e) ? Rat(-1) : Rat(1); }

} // namespace donaldson
