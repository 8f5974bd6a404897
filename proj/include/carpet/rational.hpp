#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>

namespace carpet {

namespace bmp = boost::multiprecision;

using BigInt = bmp::number<bmp::gmp_int, bmp::et_off>;
using Rational = bmp::number<bmp::gmp_rational, bmp::et_off>;
// Variable-precision binary float. Values carry their own precision; build
// them through make_real so the precision is explicit at every call site.
using HighReal = bmp::number<bmp::mpfr_float_backend<0>, bmp::et_off>;

inline constexpr unsigned kDefaultDigits = 50;

HighReal make_real(const Rational& value, unsigned digits10);
HighReal make_real(long value, unsigned digits10);

// Parses "a", "-a", "a/b" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

BigInt floor(const Rational& q);
BigInt ceil(const Rational& q);
Rational frac(const Rational& q);  // q - floor(q), in [0, 1)
bool is_integer(const Rational& q);
BigInt ipow(const BigInt& base, unsigned exp);
Rational rpow(const Rational& base, int exp);

// Checked integer power for machine-word grid sizes; false on overflow.
bool checked_pow(std::uint64_t base, unsigned exp, std::uint64_t& out);

struct Point2 {
    Rational x;
    Rational y;

    friend bool operator==(const Point2&, const Point2&) = default;
    friend bool operator<(const Point2& a, const Point2& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
    Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
    Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
};

inline Rational cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }

std::string to_string(const Point2& p);

}  // namespace carpet
