#include "ek/rational.hpp"

#include "ek/errors.hpp"

namespace ek {

namespace {

bool is_integer_token(const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text, true)) throw InputError("bad rational '" + text + "'");
        return Rational(BigInt(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num, true) || !is_integer_token(den, false))
        throw InputError("bad rational '" + text + "'");
    BigInt d(den);
    if (d == 0) throw InputError("bad rational '" + text + "': zero denominator");
    return Rational(BigInt(num), d);
}

std::string rational_to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

int bit_length(const BigInt& x) {
    if (x == 0) return 0;
    return static_cast<int>(boost::multiprecision::msb(boost::multiprecision::abs(x))) + 1;
}

int coordinate_bit_length(const Rational& r) {
    return std::max(bit_length(numerator(r)), bit_length(denominator(r)));
}

}  // namespace ek
