#pragma once

// Exact planar similitudes z -> lambda * O * z + t.
//
// The scale lambda lives in the multiplicative Q-vector space spanned by the
// primes (a finitely supported map prime -> rational exponent), so questions
// like "is log(lambda) / log(n) rational?" are decided exactly. Orthogonal
// parts are restricted to rational unit vectors (a, b) with a^2 + b^2 = 1.

#include "carpet/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace carpet {

class ScaleValue {
public:
    using ExponentMap = std::map<BigInt, Rational>;

    ScaleValue() = default;  // the value 1

    // Positive rational; factors numerator and denominator.
    static ScaleValue from_rational(const Rational& q);
    // base^exponent for an arbitrary integer base >= 2.
    static ScaleValue power(const BigInt& base, const Rational& exponent);
    // Keys must be primes; zero exponents are dropped.
    static ScaleValue from_exponents(const ExponentMap& exponents);

    const ExponentMap& exponents() const noexcept { return exponents_; }
    bool is_one() const noexcept { return exponents_.empty(); }
    bool is_rational() const;
    Rational to_rational() const;  // UnsupportedError unless is_rational()

    ScaleValue operator*(const ScaleValue& other) const;
    ScaleValue pow(const Rational& r) const;
    ScaleValue inverse() const { return pow(Rational(-1)); }

    HighReal log(unsigned digits10) const;
    // "1/6" when rational, otherwise "2^1/3*3^-2".
    std::string str() const;

    friend bool operator==(const ScaleValue&, const ScaleValue&) = default;

private:
    ExponentMap exponents_;
};

// r with lambda = base^r, or nullopt when the exponent vectors are not
// parallel. DomainError if base == 1.
std::optional<Rational> log_commensurable(const ScaleValue& lambda, const ScaleValue& base);

enum class OrthoKind { rotation, reflection };

// rotation:   ((a, -b), (b,  a))   acts on w = x + iy as w -> z w
// reflection: ((a,  b), (b, -a))   acts as w -> z conj(w)
// with z = a + ib.
class RationalOrthogonal {
public:
    static RationalOrthogonal rotation(const Rational& a, const Rational& b);
    static RationalOrthogonal reflection(const Rational& a, const Rational& b);
    static RationalOrthogonal identity() { return rotation(Rational(1), Rational(0)); }

    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }
    OrthoKind kind() const noexcept { return kind_; }
    bool is_rotation() const noexcept { return kind_ == OrthoKind::rotation; }

    // Row-major 2x2 matrix.
    std::array<Rational, 4> matrix() const;
    int determinant() const noexcept { return is_rotation() ? 1 : -1; }
    bool is_axis_aligned() const { return a_ == 0 || b_ == 0; }
    bool is_identity() const { return is_rotation() && a_ == 1 && b_ == 0; }

    Point2 apply(const Point2& p) const;
    // this o inner
    RationalOrthogonal compose(const RationalOrthogonal& inner) const;
    RationalOrthogonal inverse() const;

    std::string str() const;

    friend bool operator==(const RationalOrthogonal&, const RationalOrthogonal&) = default;

private:
    RationalOrthogonal(Rational a, Rational b, OrthoKind kind)
        : a_(std::move(a)), b_(std::move(b)), kind_(kind) {}

    Rational a_;
    Rational b_;
    OrthoKind kind_;
};

bool is_oblique(const RationalOrthogonal& o);

// z -> scale * D * O * z + translation, where D = diag(dx, dy) is the identity
// for genuine similitudes. A non-trivial D is the escape hatch for the
// axis-parallel affine cylinder maps of carpets with n > m; such maps are
// flagged (is_similitude() == false) and have an axis-aligned O.
class RationalSimilitude {
public:
    RationalSimilitude() = default;  // identity
    RationalSimilitude(ScaleValue scale, RationalOrthogonal orthogonal, Point2 translation);

    // z -> scale * diag(dx, dy) * O * z + translation
    static RationalSimilitude diagonal_affine(const Rational& dx, const Rational& dy,
                                              const RationalOrthogonal& orthogonal, Point2 translation,
                                              ScaleValue scale = {});

    const ScaleValue& scale() const noexcept { return scale_; }
    const RationalOrthogonal& orthogonal() const noexcept { return orthogonal_; }
    const Point2& translation() const noexcept { return translation_; }
    bool is_similitude() const noexcept { return !diagonal_.has_value(); }
    // Diagonal factors (dx, dy); (1, 1) for genuine similitudes.
    std::pair<Rational, Rational> diagonal() const;
    // Row-major scale * D * O; needs a rational scale.
    std::array<Rational, 4> linear_matrix() const;

    Point2 apply(const Point2& p) const;  // UnsupportedError for irrational scales
    RationalSimilitude inverse() const;

    std::string str() const;

    friend bool operator==(const RationalSimilitude&, const RationalSimilitude&) = default;

private:
    void normalize();

    ScaleValue scale_;
    RationalOrthogonal orthogonal_ = RationalOrthogonal::identity();
    Point2 translation_{Rational(0), Rational(0)};
    std::optional<std::pair<Rational, Rational>> diagonal_;
};

// f o g
RationalSimilitude compose(const RationalSimilitude& f, const RationalSimilitude& g);

// DomainError for flagged diagonal-affine maps.
bool is_oblique(const RationalSimilitude& f);

// Rotations and reflections with (a, b) = (+-p/h, +-q/h) for primitive
// Pythagorean triples with h <= max_hypotenuse, plus the 8 axis-aligned
// elements. Sorted by (h, a, b), rotations before reflections.
std::vector<RationalOrthogonal> enumerate_rational_orthogonals(int max_hypotenuse);

// Literal syntax: whitespace separated "scale=<s>", "rot=<a>,<b>" or
// "refl=<a>,<b>", "t=<x>,<y>", optionally "diag=<dx>,<dy>". The scale is a
// rational ("1/6") or a product of prime powers with rational exponents
// ("2^1/3*3^-2"). Missing fields default to the identity.
RationalSimilitude parse_similitude(std::string_view literal);

}  // namespace carpet
