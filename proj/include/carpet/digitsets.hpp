#pragma once

// Deleted-digit sets E(n, D) and horizontal slices K^y of a carpet.
//
// A slice is driven by a base-m digit word y_1 y_2 ... over J; its level-p
// approximation is the union of the closed intervals [a, a + n^-p] with
// a = sum_{k<=p} x_k n^-k, x_k in I_{y_k}. Integer endpoints below are in
// units of n^-p.

#include "carpet/expansion.hpp"
#include "carpet/pattern.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace carpet {

inline constexpr std::size_t kDefaultIntervalBudget = std::size_t{1} << 24;

class DeletedDigitSet {
public:
    // DomainError unless 2 <= base and D is a non-empty subset of [0, base).
    DeletedDigitSet(int base, std::vector<int> digits);

    int base() const noexcept { return base_; }
    const std::vector<int>& digits() const noexcept { return digits_; }  // sorted
    bool full_interior() const noexcept { return digits_.size() == static_cast<std::size_t>(base_); }

    friend bool operator==(const DeletedDigitSet&, const DeletedDigitSet&) = default;

private:
    int base_;
    std::vector<int> digits_;
};

// Closed intervals [lo, hi] in units of base^-level.
struct IntervalRun {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    friend bool operator==(const IntervalRun&, const IntervalRun&) = default;
};

struct DigitSetApprox {
    unsigned level = 0;
    int base = 2;
    std::vector<std::uint64_t> left_endpoints;  // the (#D)^k raw intervals, sorted
    std::vector<IntervalRun> components;        // maximal merged runs; adjacent intervals are joined
};

// E_k(n, D). ResourceError past the interval budget.
DigitSetApprox ddset_approx(const DeletedDigitSet& set, unsigned k, std::size_t budget = kDefaultIntervalBudget);

// (E(n, I), E(m, J)) = (pi_1(K), pi_2(K)).
std::pair<DeletedDigitSet, DeletedDigitSet> projections(const CarpetPattern& pattern);

// Base-m expansions of y whose digits all lie in J; empty when y is not in
// pi_2(K). DomainError outside [0, 1].
std::vector<EventuallyPeriodicDigits> slice_digits(const CarpetPattern& pattern, const Rational& y);

struct SliceApprox {
    unsigned level = 0;
    int base = 2;
    std::vector<std::uint64_t> left_endpoints;  // sorted
};

// K^y_p. DomainError if a digit of y is outside J or the word is not base m.
SliceApprox slice_approx(const CarpetPattern& pattern, const EventuallyPeriodicDigits& y, unsigned p,
                         std::size_t budget = kDefaultIntervalBudget);

// Limit of log(prod_{k<=M} #I_{y_k}) / log(n^M): log(P) / (q log n) with P
// the product of #I_{y_k} over one period of length q.
struct SliceDimension {
    int base = 2;
    BigInt period_product = 1;
    std::size_t period_length = 1;
    std::size_t max_row_count = 1;  // N
    bool attains_bound = false;     // P == N^q

    HighReal value(unsigned digits10 = kDefaultDigits) const;
    HighReal bound(unsigned digits10 = kDefaultDigits) const;  // log N / log n
    std::string str() const;                                   // "log(4)/(2*log(3))"
};

SliceDimension slice_lower_box_dim(const CarpetPattern& pattern, const EventuallyPeriodicDigits& y);

struct GapInterval {
    Rational lo;
    Rational hi;
    bool certified_disjoint = true;
};

struct SliceGaps {
    unsigned level = 0;              // p
    unsigned certification_level = 0;  // p'
    std::vector<GapInterval> gaps;   // ordered by lo
    Rational max_scaled_gap = 0;     // max |G| n^p
};

// For each basic interval U of K^y_p, the maximal open subintervals of U
// that meet no basic interval of K^y_{p'}. DomainError unless p <= p'.
SliceGaps slice_gaps(const CarpetPattern& pattern, const EventuallyPeriodicDigits& y, unsigned p, unsigned p_prime,
                     std::size_t budget = kDefaultIntervalBudget);

enum class Side { left, right };

struct IsolatedPoint {
    Rational point;
    Rational radius;  // (point - radius, point) (or the mirror interval) misses K^y
    Side side = Side::left;
    unsigned depth = 0;
};

// One-sided isolated points of K^y certified from the level-`depth`
// approximation: for each basic interval, its extreme point of K^y on the
// requested side, kept when the neighbouring interval leaves a positive gap.
// Sound but incomplete. Empty when K^y is the whole unit interval.
std::vector<IsolatedPoint> isolated_points(const CarpetPattern& pattern, const EventuallyPeriodicDigits& y, Side side,
                                           unsigned depth, std::size_t budget = kDefaultIntervalBudget);

// x in K^y, i.e. some base-n expansion of x has x_k in I_{y_k} for all k.
bool slice_contains(const CarpetPattern& pattern, const EventuallyPeriodicDigits& y, const Rational& x);

}  // namespace carpet
