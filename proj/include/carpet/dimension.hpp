#pragma once

#include "carpet/pattern.hpp"

namespace carpet {

// (1 / log m) * log( sum_j (#I_j)^(log m / log n) ), evaluated with
// digits10 significant digits. When log m / log n = a/b is rational the
// powers are taken as exact b-th roots, so integer anchors come out exact.
HighReal hausdorff_dimension(const CarpetPattern& pattern, unsigned digits10 = kDefaultDigits);

}  // namespace carpet
