#pragma once

// Convex hull of a carpet and exact angle bookkeeping.
//
// An angle is stored as the ray of the complex number dot + i*cross,
// normalised to coprime integers by a positive factor, so two AngleReps are
// equal iff they describe the same angle mod 2*pi. Adding angles multiplies
// the complex numbers.

#include "carpet/pattern.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace carpet {

class AngleRep {
public:
    // DomainError if both are zero.
    AngleRep(const Rational& dot, const Rational& cross);
    static AngleRep zero() { return {Rational(1), Rational(0)}; }
    // Angle from u to w, counterclockwise.
    static AngleRep between(const Point2& u, const Point2& w) { return {carpet::dot(u, w), carpet::cross(u, w)}; }

    const BigInt& dot() const noexcept { return dot_; }
    const BigInt& cross() const noexcept { return cross_; }
    // cross / dot, nullopt for a vertical direction (dot == 0).
    std::optional<Rational> tangent() const;

    AngleRep operator+(const AngleRep& o) const;  // angle addition
    AngleRep operator-() const;                   // reflection of the angle
    AngleRep supplement() const;                  // pi - alpha

    std::string str() const;  // "(dot,cross)"

    friend bool operator==(const AngleRep&, const AngleRep&) = default;
    friend bool operator<(const AngleRep& a, const AngleRep& b) {
        if (a.dot_ != b.dot_) return a.dot_ < b.dot_;
        return a.cross_ < b.cross_;
    }

private:
    BigInt dot_;
    BigInt cross_;
};

struct HullPolygon {
    std::vector<Point2> vertices;      // counterclockwise
    std::vector<Digit> source_digits;  // vertices[t] is the fixed point of source_digits[t]
    // True when the hull of the fixed points provably equals hull(K) (n == m).
    bool equals_carpet_hull = false;
};

// Hull of the fixed points with collinear points dropped, counterclockwise
// from the lowest vertex (leftmost among ties). DegenerateError when the
// pattern is line-supported.
HullPolygon convex_hull(const CarpetPattern& pattern);

// alpha_t at each vertex: the angle from the outgoing edge to the incoming
// edge, both taken as vectors from the vertex.
std::vector<AngleRep> interior_angles(const HullPolygon& hull);

// Every class sum_{t in run} (pi - alpha_t) mod 2*pi over runs of
// consecutive vertices (lengths 1..p, every start), together with the
// classes for the reversed orientation.
std::set<AngleRep> angle_sums(const HullPolygon& hull);

enum class NivenVerdict { admissible, excluded_by_niven, axis_parallel };

std::string to_string(NivenVerdict v);

// axis_parallel for tangent 0 or infinity, admissible for tangent +-1,
// excluded_by_niven for any other rational tangent.
NivenVerdict niven_admissible(const AngleRep& theta);

// phi_{d_t}^r(v_{t+1}) for r = 1..count, where d_t is the digit of v_t and
// edges are indexed 1..p. Requires n == m. Every point is checked in K.
std::vector<Point2> limit_points_on_edge(const CarpetPattern& pattern, const HullPolygon& hull, std::size_t t,
                                         std::size_t count);

struct SeparationReport {
    bool verified = false;  // first-level pieces pairwise disjoint
    unsigned depth = 0;     // level of the outer approximations used
    std::size_t touching_pairs = 0;
};

// Checks that the level-depth outer approximations of the pieces phi_d(K)
// are pairwise disjoint as closed sets. A failure only means "not verified".
SeparationReport strong_separation(const CarpetPattern& pattern, unsigned depth = 3);

}  // namespace carpet
