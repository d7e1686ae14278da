#include "donaldson/rational.hpp"

#include <cctype>

namespace donaldson {

namespace {

bool is_plain_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rat rat_from_string(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_plain_integer(text))
            fail(ErrorKind::parse, "malformed rational '" + text + "' (expected p or p/q)");
        return Rat(Int(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_plain_integer(num) || !is_plain_integer(den) || den[0] == '-')
        fail(ErrorKind::parse, "malformed rational '" + text + "' (expected p or p/q)");
    Int d(den);
    if (d == 0) fail(ErrorKind::parse, "zero denominator in '" + text + "'");
    return Rat(Int(num), d);
}

std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_pow(const Rat& base, unsigned exponent) {
    Rat result(1);
    Rat b = base;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1u) result *= b;
        b *= b;
        e >>= 1u;
    }
    return result;
}

Rat factorial(unsigned n) {
    Rat result(1);
    for (unsigned k = 2; k <= n; ++k) result *= k;
    return result;
}

} // namespace donaldson
