#include "carpet/cells.hpp"

#include "carpet/errors.hpp"

#include <algorithm>

namespace carpet {

CellSet::CellSet(unsigned level, int n, int m, std::vector<Cell> cells)
    : level_(level), n_(n), m_(m), cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool CellSet::contains(const Cell& c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

std::uint64_t grid_width(const CarpetPattern& pattern, unsigned k) {
    std::uint64_t w = 0;
    if (!checked_pow(static_cast<std::uint64_t>(pattern.n()), k, w)) {
        throw ResourceError("n^" + std::to_string(k) + " overflows 64-bit grid coordinates");
    }
    return w;
}

std::uint64_t grid_height(const CarpetPattern& pattern, unsigned k) {
    std::uint64_t h = 0;
    if (!checked_pow(static_cast<std::uint64_t>(pattern.m()), k, h)) {
        throw ResourceError("m^" + std::to_string(k) + " overflows 64-bit grid coordinates");
    }
    return h;
}

namespace {

void check_budget(const CarpetPattern& pattern, unsigned k, std::size_t budget) {
    std::uint64_t count = 0;
    if (!checked_pow(pattern.size(), k, count) || count > budget) {
        throw ResourceError("level " + std::to_string(k) + " has more than " + std::to_string(budget) + " cells");
    }
    grid_width(pattern, k);
    grid_height(pattern, k);
}

}  // namespace

CellSet refine(const CarpetPattern& pattern, const CellSet& set, std::size_t budget) {
    if (set.n() != pattern.n() || set.m() != pattern.m()) throw DomainError("cell set belongs to another grid");
    check_budget(pattern, set.level() + 1, budget);
    std::vector<Cell> next;
    next.reserve(set.size() * pattern.size());
    const auto n = static_cast<std::uint64_t>(pattern.n());
    const auto m = static_cast<std::uint64_t>(pattern.m());
    for (const Cell& c : set.cells()) {
        for (const Digit& d : pattern.digits()) {
            next.push_back({c.p * n + static_cast<std::uint64_t>(d.i), c.q * m + static_cast<std::uint64_t>(d.j)});
        }
    }
    return CellSet(set.level() + 1, pattern.n(), pattern.m(), std::move(next));
}

CellSet cells(const CarpetPattern& pattern, unsigned k, std::size_t budget) {
    check_budget(pattern, k, budget);
    CellSet set(0, pattern.n(), pattern.m(), {Cell{0, 0}});
    for (unsigned level = 0; level < k; ++level) set = refine(pattern, set, budget);
    return set;
}

void for_each_cell(const CarpetPattern& pattern, unsigned k, const std::function<void(const Cell&)>& visit) {
    grid_width(pattern, k);
    grid_height(pattern, k);
    const auto n = static_cast<std::uint64_t>(pattern.n());
    const auto m = static_cast<std::uint64_t>(pattern.m());
    const auto& ds = pattern.digits();
    // explicit stack of (cell, depth, next digit index)
    struct Frame {
        Cell cell;
        unsigned depth;
        std::size_t next;
    };
    std::vector<Frame> stack;
    stack.reserve(k + 1);
    stack.push_back({{0, 0}, 0, 0});
    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.depth == k) {
            visit(top.cell);
            stack.pop_back();
            continue;
        }
        if (top.next == ds.size()) {
            stack.pop_back();
            continue;
        }
        const Digit& d = ds[top.next++];
        const Cell child{top.cell.p * n + static_cast<std::uint64_t>(d.i), top.cell.q * m + static_cast<std::uint64_t>(d.j)};
        stack.push_back({child, top.depth + 1, 0});
    }
}

}  // namespace carpet
