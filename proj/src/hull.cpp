#include "carpet/hull.hpp"

#include "carpet/cells.hpp"
#include "carpet/errors.hpp"
#include "carpet/membership.hpp"

#include <algorithm>
#include <map>

namespace carpet {

AngleRep::AngleRep(const Rational& dot, const Rational& cross) {
    if (dot == 0 && cross == 0) throw DomainError("angle of the zero vector");
    // clear denominators, then divide out the content
    const BigInt l = lcm(denominator(dot), denominator(cross));
    BigInt d = numerator(dot) * (l / denominator(dot));
    BigInt c = numerator(cross) * (l / denominator(cross));
    const BigInt g = gcd(abs(d), abs(c));
    dot_ = d / g;
    cross_ = c / g;
}

std::optional<Rational> AngleRep::tangent() const {
    if (dot_ == 0) return std::nullopt;
    return Rational(cross_, dot_);
}

AngleRep AngleRep::operator+(const AngleRep& o) const {
    return {Rational(dot_ * o.dot_ - cross_ * o.cross_), Rational(dot_ * o.cross_ + cross_ * o.dot_)};
}

AngleRep AngleRep::operator-() const { return {Rational(dot_), Rational(-cross_)}; }

AngleRep AngleRep::supplement() const { return {Rational(-dot_), Rational(cross_)}; }

std::string AngleRep::str() const { return "(" + dot_.str() + "," + cross_.str() + ")"; }

// ---------------------------------------------------------------------------

HullPolygon convex_hull(const CarpetPattern& pattern) {
    if (line_supported(pattern)) throw DegenerateError("pattern is supported on a line; its hull is a segment");
    std::map<Point2, Digit> source;
    for (const Digit& d : pattern.digits()) source.emplace(pattern.fixed_point(d), d);
    std::vector<Point2> pts;
    for (const auto& [p, d] : source) pts.push_back(p);  // sorted by (x, y)

    // Andrew's monotone chain; collinear points are popped.
    std::vector<Point2> hull(2 * pts.size());
    std::size_t k = 0;
    for (const Point2& p : pts) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        const Point2& p = pts[i];
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
        hull[k++] = p;
    }
    hull.resize(k - 1);

    const auto start = std::min_element(hull.begin(), hull.end(), [](const Point2& a, const Point2& b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    });
    std::rotate(hull.begin(), start, hull.end());

    HullPolygon out;
    out.vertices = std::move(hull);
    for (const Point2& v : out.vertices) out.source_digits.push_back(source.at(v));
    out.equals_carpet_hull = pattern.self_similar();
    return out;
}

std::vector<AngleRep> interior_angles(const HullPolygon& hull) {
    const auto& v = hull.vertices;
    const std::size_t p = v.size();
    std::vector<AngleRep> out;
    out.reserve(p);
    for (std::size_t t = 0; t < p; ++t) {
        const Point2 in = v[(t + p - 1) % p] - v[t];
        const Point2 outgoing = v[(t + 1) % p] - v[t];
        out.push_back(AngleRep::between(outgoing, in));
    }
    return out;
}

std::set<AngleRep> angle_sums(const HullPolygon& hull) {
    const auto alpha = interior_angles(hull);
    const std::size_t p = alpha.size();
    std::set<AngleRep> out;
    for (std::size_t start = 0; start < p; ++start) {
        AngleRep acc = AngleRep::zero();
        for (std::size_t len = 1; len <= p; ++len) {
            acc = acc + alpha[(start + len - 1) % p].supplement();
            out.insert(acc);
            out.insert(-acc);
        }
    }
    return out;
}

std::string to_string(NivenVerdict v) {
    switch (v) {
        case NivenVerdict::admissible: return "admissible";
        case NivenVerdict::excluded_by_niven: return "excluded-by-niven";
        case NivenVerdict::axis_parallel: return "axis-parallel";
    }
    return "?";
}

NivenVerdict niven_admissible(const AngleRep& theta) {
    if (theta.dot() == 0 || theta.cross() == 0) return NivenVerdict::axis_parallel;
    if (abs(theta.dot()) == abs(theta.cross())) return NivenVerdict::admissible;
    return NivenVerdict::excluded_by_niven;
}

std::vector<Point2> limit_points_on_edge(const CarpetPattern& pattern, const HullPolygon& hull, std::size_t t,
                                         std::size_t count) {
    if (!pattern.self_similar()) throw UnsupportedError("limit points along hull edges need n == m");
    const std::size_t p = hull.vertices.size();
    if (t < 1 || t > p) throw DomainError("edge index must be in 1.." + std::to_string(p));
    const RationalSimilitude phi = cylinder_map(pattern, hull.source_digits[t - 1]);
    Point2 z = hull.vertices[t % p];
    std::vector<Point2> out;
    for (std::size_t r = 0; r < count; ++r) {
        z = phi.apply(z);
        if (!contains_point(pattern, z)) throw std::logic_error("edge point " + to_string(z) + " is not in K");
        out.push_back(z);
    }
    return out;
}

SeparationReport strong_separation(const CarpetPattern& pattern, unsigned depth) {
    const CellSet base = cells(pattern, depth);
    const auto W = grid_width(pattern, depth);
    const auto H = grid_height(pattern, depth);
    grid_width(pattern, depth + 1);
    grid_height(pattern, depth + 1);

    std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> owner;
    const auto& ds = pattern.digits();
    for (std::size_t a = 0; a < ds.size(); ++a) {
        const auto ox = static_cast<std::uint64_t>(ds[a].i) * W;
        const auto oy = static_cast<std::uint64_t>(ds[a].j) * H;
        for (const Cell& c : base.cells()) owner.emplace(std::make_pair(ox + c.p, oy + c.q), a);
    }
    std::set<std::pair<std::size_t, std::size_t>> touching;
    for (const auto& [key, a] : owner) {
        for (int dx = -1; dx <= 1; ++dx) {
            for (int dy = -1; dy <= 1; ++dy) {
                if ((dx < 0 && key.first == 0) || (dy < 0 && key.second == 0)) continue;
                const auto it = owner.find({key.first + static_cast<std::uint64_t>(dx), key.second + static_cast<std::uint64_t>(dy)});
                if (it != owner.end() && it->second != a) touching.emplace(std::min(a, it->second), std::max(a, it->second));
            }
        }
    }
    return {touching.empty(), depth, touching.size()};
}

}  // namespace carpet
