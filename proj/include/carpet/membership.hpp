#pragma once

#include "carpet/expansion.hpp"
#include "carpet/pattern.hpp"

namespace carpet {

// Exact test of (x, y) in K: some base-n expansion of x and base-m expansion
// of y are digit-wise admissible. DomainError outside [0, 1]^2.
bool contains_point(const CarpetPattern& pattern, const Rational& x, const Rational& y);
inline bool contains_point(const CarpetPattern& pattern, const Point2& z) { return contains_point(pattern, z.x, z.y); }

// True iff the digit pairs (x_k, y_k) lie in the pattern for every k.
bool admissible(const CarpetPattern& pattern, const EventuallyPeriodicDigits& x, const EventuallyPeriodicDigits& y);

}  // namespace carpet
