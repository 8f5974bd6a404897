#include "carpet/membership.hpp"

#include "carpet/errors.hpp"

namespace carpet {

bool admissible(const CarpetPattern& pattern, const EventuallyPeriodicDigits& x, const EventuallyPeriodicDigits& y) {
    if (x.base() != pattern.n() || y.base() != pattern.m()) throw DomainError("expansion bases do not match the pattern");
    const AlignedSpan span = aligned_span(x, y);
    for (std::size_t k = 1; k <= span.total(); ++k) {
        if (!pattern.has(x.digit_at(k), y.digit_at(k))) return false;
    }
    return true;
}

bool contains_point(const CarpetPattern& pattern, const Rational& x, const Rational& y) {
    if (x < 0 || x > 1 || y < 0 || y > 1) {
        throw DomainError("point (" + x.str() + ", " + y.str() + ") is outside the unit square");
    }
    const auto xs = expansions(x, pattern.n());
    const auto ys = expansions(y, pattern.m());
    for (const auto& ex : xs) {
        for (const auto& ey : ys) {
            if (admissible(pattern, ex, ey)) return true;
        }
    }
    return false;
}

}  // namespace carpet
