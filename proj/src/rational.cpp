#include "carpet/rational.hpp"

#include "carpet/errors.hpp"

#include <cctype>
#include <limits>

namespace carpet {

HighReal make_real(const Rational& value, unsigned digits10) {
    HighReal num(0, digits10);
    HighReal den(0, digits10);
    num = HighReal(numerator(value), digits10);
    den = HighReal(denominator(value), digits10);
    return num / den;
}

HighReal make_real(long value, unsigned digits10) { return HighReal(value, digits10); }

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        negative = s[pos] == '-';
        ++pos;
    }
    if (pos == s.size()) throw ParseError(0, "invalid rational '" + std::string(whole) + "'");
    for (std::size_t i = pos; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError(0, "invalid rational '" + std::string(whole) + "'");
    }
    BigInt z(std::string(s.substr(pos)));
    return negative ? BigInt(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
    const BigInt num = parse_integer(trim(s.substr(0, slash)), text);
    const std::string_view den_text = trim(s.substr(slash + 1));
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw ParseError(0, "sign not allowed in denominator of '" + std::string(text) + "'");
    const BigInt den = parse_integer(den_text, text);
    if (den == 0) throw ParseError(0, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& q) { return q.str(); }
std::string to_string(const BigInt& z) { return z.str(); }

std::string to_string(const Point2& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

BigInt floor(const Rational& q) {
    const BigInt n = numerator(q);
    const BigInt d = denominator(q);  // always positive
    BigInt r = n / d;                 // truncates toward zero
    if (n < 0 && r * d != n) r -= 1;
    return r;
}

BigInt ceil(const Rational& q) {
    BigInt f = floor(q);
    if (Rational(f) != q) f += 1;
    return f;
}

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

bool is_integer(const Rational& q) { return denominator(q) == 1; }

BigInt ipow(const BigInt& base, unsigned exp) { return bmp::pow(base, exp); }

Rational rpow(const Rational& base, int exp) {
    if (exp >= 0) {
        return Rational(ipow(numerator(base), static_cast<unsigned>(exp)),
                        ipow(denominator(base), static_cast<unsigned>(exp)));
    }
    if (base == 0) throw DomainError("zero to a negative power");
    const auto e = static_cast<unsigned>(-exp);
    return Rational(ipow(denominator(base), e), ipow(numerator(base), e));
}

bool checked_pow(std::uint64_t base, unsigned exp, std::uint64_t& out) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) return false;
        r *= base;
    }
    out = r;
    return true;
}

}  // namespace carpet
