#pragma once

// Raster and vector output of level-k approximations. Carpet y points up;
// image row 0 is the top (y near 1) unless flip_y is set.

#include "carpet/cells.hpp"
#include "carpet/pattern.hpp"

#include <optional>
#include <string>
#include <vector>

namespace carpet {

inline constexpr std::uint64_t kMaxPixels = 1ull << 28;

struct RenderOptions {
    unsigned level = 1;
    std::uint64_t width = 0;   // 0: n^k
    std::uint64_t height = 0;  // 0: m^k
    bool flip_y = false;
};

// Binary PBM (P4): 1 bits are black = selected, rows padded to whole bytes,
// most significant bit first. With an explicit size each pixel samples the
// cell under its centre.
std::string render_pbm(const CarpetPattern& pattern, const RenderOptions& options);

struct SvgOverlays {
    bool hull = false;
    std::optional<Rational> slice_y;  // horizontal line
    std::vector<Point2> markers;      // drawn as crosses
};

// One rect per selected cell in a viewBox of n^k by m^k units, followed by
// the requested overlays (polygon, line elements).
std::string render_svg(const CarpetPattern& pattern, const RenderOptions& options, const SvgOverlays& overlays = {});

}  // namespace carpet
