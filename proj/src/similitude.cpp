#include "carpet/errors.hpp"
#include "carpet/similitude.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

namespace carpet {

// ---------------------------------------------------------------------------
// RationalOrthogonal

namespace {

void require_unit(const Rational& a, const Rational& b) {
    if (a * a + b * b != 1) {
        throw DomainError("orthogonal part needs a^2 + b^2 = 1, got a=" + a.str() + " b=" + b.str());
    }
}

}  // namespace

RationalOrthogonal RationalOrthogonal::rotation(const Rational& a, const Rational& b) {
    require_unit(a, b);
    return RationalOrthogonal(a, b, OrthoKind::rotation);
}

RationalOrthogonal RationalOrthogonal::reflection(const Rational& a, const Rational& b) {
    require_unit(a, b);
    return RationalOrthogonal(a, b, OrthoKind::reflection);
}

std::array<Rational, 4> RationalOrthogonal::matrix() const {
    if (is_rotation()) return {a_, -b_, b_, a_};
    return {a_, b_, b_, -a_};
}

Point2 RationalOrthogonal::apply(const Point2& p) const {
    if (is_rotation()) return {a_ * p.x - b_ * p.y, b_ * p.x + a_ * p.y};
    return {a_ * p.x + b_ * p.y, b_ * p.x - a_ * p.y};
}

RationalOrthogonal RationalOrthogonal::compose(const RationalOrthogonal& inner) const {
    // outer(w) = z1 w or z1 conj(w); a reflection outside conjugates inner's z.
    const Rational c = inner.a_;
    const Rational d = is_rotation() ? inner.b_ : -inner.b_;
    const OrthoKind kind = (is_rotation() == inner.is_rotation()) ? OrthoKind::rotation : OrthoKind::reflection;
    return RationalOrthogonal(a_ * c - b_ * d, a_ * d + b_ * c, kind);
}

RationalOrthogonal RationalOrthogonal::inverse() const {
    if (is_rotation()) return RationalOrthogonal(a_, -b_, OrthoKind::rotation);
    return *this;
}

std::string RationalOrthogonal::str() const {
    return std::string(is_rotation() ? "rot=" : "refl=") + a_.str() + "," + b_.str();
}

bool is_oblique(const RationalOrthogonal& o) { return o.a() != 0 && o.b() != 0; }

// ---------------------------------------------------------------------------
// RationalSimilitude

RationalSimilitude::RationalSimilitude(ScaleValue scale, RationalOrthogonal orthogonal, Point2 translation)
    : scale_(std::move(scale)), orthogonal_(std::move(orthogonal)), translation_(std::move(translation)) {}

RationalSimilitude RationalSimilitude::diagonal_affine(const Rational& dx, const Rational& dy,
                                                       const RationalOrthogonal& orthogonal, Point2 translation,
                                                       ScaleValue scale) {
    if (dx <= 0 || dy <= 0) throw DomainError("diagonal factors must be positive");
    if (!orthogonal.is_axis_aligned()) {
        throw UnsupportedError("diagonal-affine maps need an axis-aligned orthogonal part");
    }
    RationalSimilitude f(std::move(scale), orthogonal, std::move(translation));
    f.diagonal_ = std::make_pair(dx, dy);
    f.normalize();
    return f;
}

void RationalSimilitude::normalize() {
    if (diagonal_ && diagonal_->first == diagonal_->second) {
        scale_ = scale_ * ScaleValue::from_rational(diagonal_->first);
        diagonal_.reset();
    }
}

std::pair<Rational, Rational> RationalSimilitude::diagonal() const {
    return diagonal_.value_or(std::make_pair(Rational(1), Rational(1)));
}

std::array<Rational, 4> RationalSimilitude::linear_matrix() const {
    const Rational s = scale_.to_rational();
    const auto [dx, dy] = diagonal();
    auto m = orthogonal_.matrix();
    m[0] *= s * dx;
    m[1] *= s * dx;
    m[2] *= s * dy;
    m[3] *= s * dy;
    return m;
}

namespace {

Point2 mat_apply(const std::array<Rational, 4>& m, const Point2& p) {
    return {m[0] * p.x + m[1] * p.y, m[2] * p.x + m[3] * p.y};
}

// O D O^-1 for an axis-aligned O: the diagonal entries, possibly swapped.
std::pair<Rational, Rational> conjugate_diagonal(const RationalOrthogonal& o, const std::pair<Rational, Rational>& d) {
    if (d.first == d.second) return d;
    if (!o.is_axis_aligned()) {
        throw UnsupportedError("cannot compose a diagonal-affine map with a non-axis-aligned orthogonal part");
    }
    if (o.b() == 0) return d;
    return {d.second, d.first};
}

}  // namespace

Point2 RationalSimilitude::apply(const Point2& p) const {
    const Point2 q = mat_apply(linear_matrix(), p);
    return {q.x + translation_.x, q.y + translation_.y};
}

RationalSimilitude RationalSimilitude::inverse() const {
    RationalSimilitude inv;
    inv.scale_ = scale_.inverse();
    inv.orthogonal_ = orthogonal_.inverse();
    if (diagonal_) {
        const std::pair<Rational, Rational> dinv{1 / diagonal_->first, 1 / diagonal_->second};
        inv.diagonal_ = conjugate_diagonal(inv.orthogonal_, dinv);
    }
    if (translation_.x != 0 || translation_.y != 0) {
        const Point2 q = mat_apply(inv.linear_matrix(), translation_);
        inv.translation_ = {-q.x, -q.y};
    }
    return inv;
}

std::string RationalSimilitude::str() const {
    std::string out = "scale=" + scale_.str() + " " + orthogonal_.str() + " t=" + translation_.x.str() + "," +
                      translation_.y.str();
    if (diagonal_) out += " diag=" + diagonal_->first.str() + "," + diagonal_->second.str();
    return out;
}

RationalSimilitude compose(const RationalSimilitude& f, const RationalSimilitude& g) {
    const bool flagged = !f.is_similitude() || !g.is_similitude();
    if (flagged && !(f.orthogonal().is_axis_aligned() && g.orthogonal().is_axis_aligned())) {
        throw UnsupportedError("cannot compose a diagonal-affine map with a non-axis-aligned orthogonal part");
    }
    const auto gd = conjugate_diagonal(f.orthogonal(), g.diagonal());
    const auto fd = f.diagonal();

    Point2 t = f.translation();
    const Point2& gt = g.translation();
    if (gt.x != 0 || gt.y != 0) {
        if (!f.scale().is_rational()) {
            throw UnsupportedError("irrational scale " + f.scale().str() + " cannot act on a rational translation");
        }
        const Point2 moved = mat_apply(f.linear_matrix(), gt);
        t = {t.x + moved.x, t.y + moved.y};
    }
    const Rational dx = fd.first * gd.first;
    const Rational dy = fd.second * gd.second;
    const RationalOrthogonal o = f.orthogonal().compose(g.orthogonal());
    if (dx == 1 && dy == 1) return RationalSimilitude(f.scale() * g.scale(), o, t);
    return RationalSimilitude::diagonal_affine(dx, dy, o, t, f.scale() * g.scale());
}

bool is_oblique(const RationalSimilitude& f) {
    if (!f.is_similitude()) throw DomainError("obliqueness is only defined for genuine similitudes");
    return is_oblique(f.orthogonal());
}

// ---------------------------------------------------------------------------

std::vector<RationalOrthogonal> enumerate_rational_orthogonals(int max_hypotenuse) {
    if (max_hypotenuse < 1) throw DomainError("max_hypotenuse must be >= 1");
    std::vector<RationalOrthogonal> out;
    for (long h = 1; h <= max_hypotenuse; ++h) {
        std::vector<std::pair<Rational, Rational>> units;
        if (h == 1) {
            units = {{Rational(1), Rational(0)}, {Rational(-1), Rational(0)},
                     {Rational(0), Rational(1)}, {Rational(0), Rational(-1)}};
        } else {
            for (long p = 1; p < h; ++p) {
                const long q2 = h * h - p * p;
                const long q = std::lround(std::sqrt(static_cast<double>(q2)));
                if (q * q != q2 || std::gcd(p, q) != 1) continue;
                for (int sp : {1, -1}) {
                    for (int sq : {1, -1}) units.emplace_back(Rational(sp * p, h), Rational(sq * q, h));
                }
            }
        }
        std::sort(units.begin(), units.end());
        for (const auto& [a, b] : units) {
            out.push_back(RationalOrthogonal::rotation(a, b));
            out.push_back(RationalOrthogonal::reflection(a, b));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// literal parsing

namespace {

std::pair<Rational, Rational> parse_pair(std::string_view value, std::string_view key) {
    const auto comma = value.find(',');
    if (comma == std::string_view::npos) {
        throw ParseError(0, std::string(key) + " expects two comma-separated rationals");
    }
    return {parse_rational(value.substr(0, comma)), parse_rational(value.substr(comma + 1))};
}

ScaleValue parse_scale(std::string_view value) {
    ScaleValue s;
    std::size_t start = 0;
    while (start <= value.size()) {
        const auto star = value.find('*', start);
        const std::string_view term = value.substr(start, star == std::string_view::npos ? value.npos : star - start);
        const auto caret = term.find('^');
        if (caret == std::string_view::npos) {
            s = s * ScaleValue::from_rational(parse_rational(term));
        } else {
            const Rational base = parse_rational(term.substr(0, caret));
            if (!is_integer(base) || base < 1) throw ParseError(0, "power base must be a positive integer");
            s = s * ScaleValue::power(numerator(base), parse_rational(term.substr(caret + 1)));
        }
        if (star == std::string_view::npos) break;
        start = star + 1;
    }
    return s;
}

}  // namespace

RationalSimilitude parse_similitude(std::string_view literal) {
    ScaleValue scale;
    RationalOrthogonal orth = RationalOrthogonal::identity();
    Point2 t{Rational(0), Rational(0)};
    std::optional<std::pair<Rational, Rational>> diag;
    bool have_orth = false;

    std::size_t pos = 0;
    while (pos < literal.size()) {
        while (pos < literal.size() && std::isspace(static_cast<unsigned char>(literal[pos]))) ++pos;
        if (pos >= literal.size()) break;
        std::size_t end = pos;
        while (end < literal.size() && !std::isspace(static_cast<unsigned char>(literal[end]))) ++end;
        const std::string_view token = literal.substr(pos, end - pos);
        pos = end;

        const auto eq = token.find('=');
        if (eq == std::string_view::npos) throw ParseError(0, "expected key=value, got '" + std::string(token) + "'");
        const std::string_view key = token.substr(0, eq);
        const std::string_view value = token.substr(eq + 1);
        if (key == "scale") {
            scale = parse_scale(value);
        } else if (key == "rot" || key == "refl") {
            if (have_orth) throw ParseError(0, "orthogonal part given twice");
            const auto [a, b] = parse_pair(value, key);
            orth = key == "rot" ? RationalOrthogonal::rotation(a, b) : RationalOrthogonal::reflection(a, b);
            have_orth = true;
        } else if (key == "t") {
            const auto [x, y] = parse_pair(value, key);
            t = {x, y};
        } else if (key == "diag") {
            diag = parse_pair(value, key);
        } else {
            throw ParseError(0, "unknown similitude field '" + std::string(key) + "'");
        }
    }
    if (!diag) return RationalSimilitude(scale, orth, t);
    return RationalSimilitude::diagonal_affine(diag->first, diag->second, orth, t, scale);
}

}  // namespace carpet
