#include "carpet/digitsets.hpp"

#include "carpet/errors.hpp"

#include <algorithm>

namespace carpet {

DeletedDigitSet::DeletedDigitSet(int base, std::vector<int> digits) : base_(base), digits_(std::move(digits)) {
    if (base_ < 2) throw DomainError("digit base must be >= 2");
    if (digits_.empty()) throw DomainError("deleted-digit set needs at least one digit");
    std::sort(digits_.begin(), digits_.end());
    if (std::adjacent_find(digits_.begin(), digits_.end()) != digits_.end()) throw DomainError("repeated digit");
    if (digits_.front() < 0 || digits_.back() >= base_) throw DomainError("digit out of range");
}

namespace {

std::uint64_t checked_grid(int base, unsigned k) {
    std::uint64_t w = 0;
    if (!checked_pow(static_cast<std::uint64_t>(base), k, w)) {
        throw ResourceError(std::to_string(base) + "^" + std::to_string(k) + " overflows 64-bit endpoints");
    }
    return w;
}

// Left endpoints of prod_k (digit set at position k), level by level.
template <class DigitsAt>
std::vector<std::uint64_t> product_endpoints(int base, unsigned k, DigitsAt digits_at, std::size_t budget) {
    checked_grid(base, k);
    std::vector<std::uint64_t> cur{0};
    for (unsigned t = 1; t <= k; ++t) {
        const std::vector<int>& ds = digits_at(t);
        if (cur.size() * ds.size() > budget) {
            throw ResourceError("level " + std::to_string(k) + " has more than " + std::to_string(budget) + " intervals");
        }
        std::vector<std::uint64_t> next;
        next.reserve(cur.size() * ds.size());
        for (std::uint64_t e : cur) {
            for (int d : ds) next.push_back(e * static_cast<std::uint64_t>(base) + static_cast<std::uint64_t>(d));
        }
        cur = std::move(next);
    }
    return cur;  // sorted: prefixes are sorted and digits ascend
}

void require_slice_word(const CarpetPattern& pattern, const EventuallyPeriodicDigits& y) {
    if (y.base() != pattern.m()) {
        throw DomainError("slice word has base " + std::to_string(y.base()) + ", expected m=" + std::to_string(pattern.m()));
    }
    for (const auto* w : {&y.preperiod(), &y.period()}) {
        for (int d : *w) {
            if (pattern.row_count(d) == 0) throw DomainError("slice digit " + std::to_string(d) + " is not in J");
        }
    }
}

}  // namespace

DigitSetApprox ddset_approx(const DeletedDigitSet& set, unsigned k, std::size_t budget) {
    DigitSetApprox out;
    out.level = k;
    out.base = set.base();
    out.left_endpoints = product_endpoints(set.base(), k, [&](unsigned) -> const std::vector<int>& { return set.digits(); }, budget);
    for (std::uint64_t e : out.left_endpoints) {
        if (!out.components.empty() && out.components.back().hi == e) {
            out.components.back().hi = e + 1;
        } else {
            out.components.push_back({e, e + 1});
        }
    }
    return out;
}

std::pair<DeletedDigitSet, DeletedDigitSet> projections(const CarpetPattern& pattern) {
    return {DeletedDigitSet(pattern.n(), pattern.columns()), DeletedDigitSet(pattern.m(), pattern.rows())};
}

std::vector<EventuallyPeriodicDigits> slice_digits(const CarpetPattern& pattern, const Rational& y) {
    std::vector<EventuallyPeriodicDigits> out;
    for (auto& e : expansions(y, pattern.m())) {
        bool ok = true;
        for (const auto* w : {&e.preperiod(), &e.period()}) {
            for (int d : *w) ok = ok && pattern.row_count(d) > 0;
        }
        if (ok) out.push_back(std::move(e));
    }
    return out;
}

SliceApprox slice_approx(const CarpetPattern& pattern, const EventuallyPeriodicDigits& y, unsigned p, std::size_t budget) {
    require_slice_word(pattern, y);
    SliceApprox out;
    out.level = p;
    out.base = pattern.n();
    out.left_endpoints = product_endpoints(
        pattern.n(), p, [&](unsigned t) -> const std::vector<int>& { return pattern.row(y.digit_at(t)); }, budget);
    return out;
}

HighReal SliceDimension::value(unsigned digits10) const {
    const unsigned work = digits10 + 10;
    HighReal v = bmp::log(HighReal(period_product, work)) /
                 (make_real(static_cast<long>(period_length), work) * bmp::log(make_real(base, work)));
    v.precision(digits10);
    return v;
}

HighReal SliceDimension::bound(unsigned digits10) const {
    const unsigned work = digits10 + 10;
    HighReal v = bmp::log(make_real(static_cast<long>(max_row_count), work)) / bmp::log(make_real(base, work));
    v.precision(digits10);
    return v;
}

std::string SliceDimension::str() const {
    const std::string num = "log(" + period_product.str() + ")";
    if (period_length == 1) return num + "/log(" + std::to_string(base) + ")";
    return num + "/(" + std::to_string(period_length) + "*log(" + std::to_string(base) + "))";
}

SliceDimension slice_lower_box_dim(const CarpetPattern& pattern, const EventuallyPeriodicDigits& y) {
    require_slice_word(pattern, y);
    SliceDimension d;
    d.base = pattern.n();
    d.period_length = y.period().size();
    d.max_row_count = pattern.max_row_count();
    for (int j : y.period()) d.period_product *= static_cast<unsigned long>(pattern.row_count(j));
    d.attains_bound = d.period_product == ipow(BigInt(d.max_row_count), static_cast<unsigned>(d.period_length));
    return d;
}

SliceGaps slice_gaps(const CarpetPattern& pattern, const EventuallyPeriodicDigits& y, unsigned p, unsigned p_prime,
                     std::size_t budget) {
    if (p > p_prime) throw DomainError("slice_gaps needs p <= p'");
    const SliceApprox outer = slice_approx(pattern, y, p, budget);
    const SliceApprox inner = slice_approx(pattern, y, p_prime, budget);
    const std::uint64_t factor = checked_grid(pattern.n(), p_prime - p);
    const BigInt fine = ipow(BigInt(pattern.n()), p_prime);
    const BigInt coarse = ipow(BigInt(pattern.n()), p);

    SliceGaps out;
    out.level = p;
    out.certification_level = p_prime;
    auto emit = [&](std::uint64_t lo, std::uint64_t hi) {
        GapInterval g{Rational(BigInt(lo), fine), Rational(BigInt(hi), fine), true};
        out.max_scaled_gap = std::max(out.max_scaled_gap, (g.hi - g.lo) * Rational(coarse));
        out.gaps.push_back(std::move(g));
    };
    auto it = inner.left_endpoints.begin();
    for (std::uint64_t a : outer.left_endpoints) {
        std::uint64_t cursor = a * factor;
        const std::uint64_t end = (a + 1) * factor;
        for (; it != inner.left_endpoints.end() && *it < end; ++it) {
            if (*it > cursor) emit(cursor, *it);
            cursor = std::max(cursor, *it + 1);
        }
        if (cursor < end) emit(cursor, end);
    }
    return out;
}

namespace {

// sum_{k > depth} c(y_k) n^-k for c = min or max of I_{y_k}.
Rational extreme_tail(const CarpetPattern& pattern, const EventuallyPeriodicDigits& y, unsigned depth, bool use_max) {
    auto pick = [&](int j) { return use_max ? pattern.row(j).back() : pattern.row(j).front(); };
    std::vector<int> pre;
    std::vector<int> per;
    for (int j : y.preperiod()) pre.push_back(pick(j));
    for (int j : y.period()) per.push_back(pick(j));
    const EventuallyPeriodicDigits w(pattern.n(), pre, per);
    Rational head = 0;
    for (unsigned k = depth; k >= 1; --k) head = (head + w.digit_at(k)) / pattern.n();
    return w.value() - head;
}

bool full_slice(const CarpetPattern& pattern, const EventuallyPeriodicDigits& y) {
    for (const auto* w : {&y.preperiod(), &y.period()}) {
        for (int j : *w) {
            if (pattern.row_count(j) != static_cast<std::size_t>(pattern.n())) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<IsolatedPoint> isolated_points(const CarpetPattern& pattern, const EventuallyPeriodicDigits& y, Side side,
                                           unsigned depth, std::size_t budget) {
    if (depth < 1) throw DomainError("isolated_points needs depth >= 1");
    require_slice_word(pattern, y);
    if (full_slice(pattern, y)) return {};
    const SliceApprox approx = slice_approx(pattern, y, depth, budget);
    const Rational unit(BigInt(1), ipow(BigInt(pattern.n()), depth));
    const Rational tail = extreme_tail(pattern, y, depth, side == Side::right);
    const auto& ends = approx.left_endpoints;

    std::vector<IsolatedPoint> out;
    for (std::size_t k = 0; k < ends.size(); ++k) {
        const Rational left = Rational(BigInt(ends[k])) * unit;
        IsolatedPoint ip;
        ip.side = side;
        ip.depth = depth;
        ip.radius = unit;
        if (side == Side::left) {
            ip.point = left + tail;
            if (k > 0) {
                const Rational gap = ip.point - Rational(BigInt(ends[k - 1] + 1)) * unit;
                if (gap <= 0) continue;
                ip.radius = std::min(gap, unit);
            }
        } else {
            ip.point = left + tail;
            if (k + 1 < ends.size()) {
                const Rational gap = Rational(BigInt(ends[k + 1])) * unit - ip.point;
                if (gap <= 0) continue;
                ip.radius = std::min(gap, unit);
            }
        }
        if (!slice_contains(pattern, y, ip.point)) {
            throw std::logic_error("isolated point candidate " + ip.point.str() + " is not in the slice");
        }
        out.push_back(std::move(ip));
    }
    return out;
}

bool slice_contains(const CarpetPattern& pattern, const EventuallyPeriodicDigits& y, const Rational& x) {
    require_slice_word(pattern, y);
    if (x < 0 || x > 1) throw DomainError("x = " + x.str() + " is outside [0, 1]");
    for (const auto& ex : expansions(x, pattern.n())) {
        const AlignedSpan span = aligned_span(ex, y);
        bool ok = true;
        for (std::size_t k = 1; ok && k <= span.total(); ++k) ok = pattern.has(ex.digit_at(k), y.digit_at(k));
        if (ok) return true;
    }
    return false;
}

}  // namespace carpet
