#pragma once

#include "carpet/pattern.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace carpet {

// Grid cell (p, q) of level k: [p/n^k, (p+1)/n^k] x [q/m^k, (q+1)/m^k].
struct Cell {
    std::uint64_t p = 0;
    std::uint64_t q = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline constexpr std::size_t kDefaultCellBudget = std::size_t{1} << 24;

// Level-k selected rectangles, kept sorted by (p, q).
class CellSet {
public:
    CellSet(unsigned level, int n, int m, std::vector<Cell> cells);

    unsigned level() const noexcept { return level_; }
    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }
    std::size_t size() const noexcept { return cells_.size(); }
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    bool contains(const Cell& c) const;

    friend bool operator==(const CellSet&, const CellSet&) = default;

private:
    unsigned level_;
    int n_;
    int m_;
    std::vector<Cell> cells_;
};

// Level-k outer approximation. ResourceError when (#digits)^k exceeds the
// budget or n^k overflows 64 bits.
CellSet cells(const CarpetPattern& pattern, unsigned k, std::size_t budget = kDefaultCellBudget);

// One substitution step: {(p n + i, q m + j)}.
CellSet refine(const CarpetPattern& pattern, const CellSet& set, std::size_t budget = kDefaultCellBudget);

// Depth-first walk over the level-k cells without storing them, in
// lexicographic digit-word order.
void for_each_cell(const CarpetPattern& pattern, unsigned k, const std::function<void(const Cell&)>& visit);

// n^k and m^k, or ResourceError when either overflows.
std::uint64_t grid_width(const CarpetPattern& pattern, unsigned k);
std::uint64_t grid_height(const CarpetPattern& pattern, unsigned k);

}  // namespace carpet
