#pragma once

// Numerical probes: box counting of oblique projections, growth of the
// projected point sets for one-digit-per-row patterns, and the comparison of
// dim K - 1 with log N / log n.

#include "carpet/pattern.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace carpet {

struct DimensionEstimate {
    double value = 0;   // least-squares slope
    double stderr_ = 0; // standard error of the slope
    std::vector<std::pair<unsigned, std::uint64_t>> levels;  // (k, box count)
    std::vector<unsigned> fitted_levels;
    std::string descriptor;  // "projection (u1,u2)"
    double expected = 0;     // min(dim K, 1)
    bool theorem_applies = false;  // log n / log m irrational
    std::string note;
};

// Projects the level-k approximate squares onto the line spanned by
// (u1, u2) and counts occupied intervals of the square's side. For n == m the
// squares are the level-k cells; for n > m, k is the row level and the
// column level is floor(k log m / log n). Exact integer offsets are bucketed
// only at the end. The fit drops the two smallest levels when at least two
// remain. DomainError for an axis-parallel direction.
DimensionEstimate box_count_projection(const CarpetPattern& pattern, const Point2& direction, unsigned k_min = 6,
                                       unsigned k_max = 12);

struct GrowthCheck {
    unsigned k = 0;            // level of the enclosing cell
    unsigned p = 0;
    std::size_t count = 0;     // distinct projections
    std::size_t digits_pow = 0;  // (#Lambda)^p
    bool passed = false;       // 2 * count >= digits_pow
};

// Inside the level-k cell of the first digit repeated, projects the points
// phi_{d^k w}(fixed point of d) for all words w of length p onto the
// direction and counts distinct values. k is the least level with
// m^(k+p) / n^k < |u2 / u1|. PreconditionError if a row has two or more
// digits; DomainError for an axis-parallel direction or when no level
// satisfies the inequality.
GrowthCheck projection_growth_check(const CarpetPattern& pattern, const Point2& direction, unsigned p);

struct MarstrandReport {
    HighReal dim;
    HighReal dim_minus_one;      // clamped at 0; the typical oblique slice bound
    HighReal row_bound;          // log N / log n
    HighReal margin;             // row_bound - (dim - 1), unclamped
    bool non_uniform = false;    // two rows with different counts (empty rows included)
    bool strict_holds = false;   // margin > 1e-10, only asserted when non_uniform
    std::string note;
};

MarstrandReport marstrand_report(const CarpetPattern& pattern, unsigned digits10 = kDefaultDigits);

}  // namespace carpet
