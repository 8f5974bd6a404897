#include "carpet/dimension_lab.hpp"

#include "carpet/dimension.hpp"
#include "carpet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace carpet {

namespace {

using i128 = __int128;

constexpr i128 kOffsetLimit = i128(1) << 62;

i128 checked_mul(i128 a, i128 b) {
    const i128 r = a * b;
    if (a != 0 && (r / a != b || r > kOffsetLimit || r < -kOffsetLimit))
        throw ResourceError("projection offsets overflow; lower the level range");
    return r;
}

i128 ipow128(i128 b, unsigned e) {
    i128 r = 1;
    for (unsigned t = 0; t < e; ++t) r = checked_mul(r, b);
    return r;
}

// Coprime integers along the rational direction.
std::pair<i128, i128> integer_direction(const Point2& u) {
    if (u.x == 0 || u.y == 0) throw DomainError("direction must be oblique; use projections() for the axes");
    const BigInt l = lcm(denominator(u.x), denominator(u.y));
    BigInt a = numerator(u.x) * (l / denominator(u.x));
    BigInt b = numerator(u.y) * (l / denominator(u.y));
    const BigInt g = gcd(abs(a), abs(b));
    a /= g;
    b /= g;
    if (abs(a) > BigInt(1) << 20 || abs(b) > BigInt(1) << 20) throw ResourceError("direction components too large");
    return {a.convert_to<long long>(), b.convert_to<long long>()};
}

// floor division for possibly negative numerators
i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Column level paired with row level k: the largest c with n^c <= m^k.
unsigned column_level(const CarpetPattern& p, unsigned k) {
    if (p.self_similar()) return k;
    std::uint64_t mk = 0;
    if (!checked_pow(static_cast<std::uint64_t>(p.m()), k, mk)) throw ResourceError("level too deep");
    unsigned c = 0;
    std::uint64_t next = 0;
    while (checked_pow(static_cast<std::uint64_t>(p.n()), c + 1, next) && next <= mk) ++c;
    return c;
}

i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
        const i128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

std::uint64_t count_boxes(const CarpetPattern& pattern, i128 u1, i128 u2, unsigned k) {
    const int n = pattern.n();
    const int m = pattern.m();
    const unsigned c = column_level(pattern, k);  // column digits used
    // projection numerator over n^c * m^k * (|u1| + |u2|) / g:
    // o = u1 * a * A + u2 * b * B, a over n^c, b over m^k
    const i128 g = gcd128(ipow128(n, c), ipow128(m, k));
    const i128 A = ipow128(m, k) / g;
    const i128 B = ipow128(n, c) / g;
    std::vector<i128> offsets{0};
    std::vector<i128> next;
    std::vector<int> rows;
    for (int j = 0; j < m; ++j) {
        if (pattern.row_count(j) > 0) rows.push_back(j);
    }
    for (unsigned t = 1; t <= k; ++t) {
        const i128 ywt = checked_mul(checked_mul(u2, ipow128(m, k - t)), B);
        std::vector<i128> terms;
        if (t <= c) {
            const i128 xwt = checked_mul(checked_mul(u1, ipow128(n, c - t)), A);
            for (const Digit& d : pattern.digits()) terms.push_back(xwt * d.i + ywt * d.j);
        } else {
            for (int j : rows) terms.push_back(ywt * j);
        }
        std::sort(terms.begin(), terms.end());
        terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
        next.clear();
        next.reserve(offsets.size() * terms.size());
        for (i128 o : offsets) {
            for (i128 w : terms) next.push_back(o + w);
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        offsets.swap(next);
    }
    // the square side m^-k is B * S in o units; a square's projection spans
    // |u1| * A + |u2| * B
    const i128 S = (u1 < 0 ? -u1 : u1) + (u2 < 0 ? -u2 : u2);
    const i128 width = checked_mul(B, S);
    const i128 span = checked_mul(u1 < 0 ? -u1 : u1, A) + checked_mul(u2 < 0 ? -u2 : u2, B);
    // lowest corner of the square relative to the lower-left one
    const i128 shift = std::min<i128>(u1 * A, 0) + std::min<i128>(u2 * B, 0);
    std::uint64_t count = 0;
    i128 last = std::numeric_limits<long long>::min();
    for (i128 o : offsets) {  // sorted, so buckets arrive in order
        const i128 lo = std::max(floor_div(o + shift, width), last + 1);
        const i128 hi = floor_div(o + shift + span - 1, width);
        if (hi >= lo) {
            count += static_cast<std::uint64_t>(hi - lo + 1);
            last = hi;
        }
    }
    return count;
}

}  // namespace

DimensionEstimate box_count_projection(const CarpetPattern& pattern, const Point2& direction, unsigned k_min,
                                       unsigned k_max) {
    if (k_min > k_max) throw DomainError("empty level range");
    const auto [u1, u2] = integer_direction(direction);
    DimensionEstimate est;
    est.descriptor = "projection (" + direction.x.str() + "," + direction.y.str() + ")";
    for (unsigned k = k_min; k <= k_max; ++k) est.levels.emplace_back(k, count_boxes(pattern, u1, u2, k));

    std::size_t first = est.levels.size() >= 4 ? 2 : 0;
    const double lb = std::log(static_cast<double>(pattern.m()));
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto N = static_cast<double>(est.levels.size() - first);
    for (std::size_t t = first; t < est.levels.size(); ++t) {
        const double x = est.levels[t].first * lb;
        const double y = std::log(static_cast<double>(est.levels[t].second));
        est.fitted_levels.push_back(est.levels[t].first);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double Sxx = sxx - sx * sx / N;
    if (Sxx > 0) {
        est.value = (sxy - sx * sy / N) / Sxx;
        if (N > 2) {
            const double intercept = (sy - est.value * sx) / N;
            double ssr = 0;
            for (std::size_t t = first; t < est.levels.size(); ++t) {
                const double r = std::log(static_cast<double>(est.levels[t].second)) -
                                 (intercept + est.value * est.levels[t].first * lb);
                ssr += r * r;
            }
            est.stderr_ = std::sqrt(ssr / (N - 2) / Sxx);
        }
    }
    const double dim = static_cast<double>(hausdorff_dimension(pattern, 20));
    est.expected = std::min(dim, 1.0);
    est.theorem_applies = !classify(pattern).log_ratio_rational;
    if (!est.theorem_applies) est.note = "no theorem guarantee: log n / log m is rational";
    return est;
}

GrowthCheck projection_growth_check(const CarpetPattern& pattern, const Point2& direction, unsigned p) {
    for (int j = 0; j < pattern.m(); ++j) {
        if (pattern.row_count(j) > 1) throw PreconditionError("row " + std::to_string(j) + " has more than one digit");
    }
    if (direction.x == 0 || direction.y == 0) throw DomainError("direction must be oblique");
    const Rational slope = abs(direction.y / direction.x);
    GrowthCheck g;
    g.p = p;
    // m^(k+p) / n^k < slope
    const Rational mp = rpow(Rational(pattern.m()), static_cast<int>(p));
    const Rational ratio(pattern.m(), pattern.n());
    Rational lhs = mp;
    unsigned k = 0;
    while (lhs >= slope) {
        if (pattern.n() == pattern.m() || k > 4096) throw DomainError("no level satisfies m^(k+p)/n^k < |u2/u1|");
        lhs *= ratio;
        ++k;
    }
    g.k = k;

    const auto& ds = pattern.digits();
    const Digit d0 = ds.front();
    const Point2 fix = pattern.fixed_point(d0);
    const RationalSimilitude head = cylinder_word(pattern, std::vector<Digit>(k, d0));
    std::set<Rational> seen;
    std::vector<std::size_t> idx(p, 0);
    std::vector<Digit> word(p);
    while (true) {
        for (unsigned t = 0; t < p; ++t) word[t] = ds[idx[t]];
        const Point2 z = head.apply(cylinder_word(pattern, word).apply(fix));
        seen.insert(z.x * direction.x + z.y * direction.y);
        unsigned t = p;
        while (t > 0 && ++idx[t - 1] == ds.size()) idx[--t] = 0;
        if (t == 0) break;
    }
    g.count = seen.size();
    g.digits_pow = 1;
    for (unsigned t = 0; t < p; ++t) g.digits_pow *= ds.size();
    g.passed = 2 * g.count >= g.digits_pow;
    return g;
}

MarstrandReport marstrand_report(const CarpetPattern& pattern, unsigned digits10) {
    MarstrandReport r;
    const unsigned work = digits10 + 10;
    r.dim = hausdorff_dimension(pattern, work);
    const HighReal one = make_real(1, work);
    const HighReal raw = r.dim - one;
    r.dim_minus_one = raw > 0 ? raw : HighReal(make_real(0, work));
    r.row_bound = log(make_real(static_cast<long>(pattern.max_row_count()), work)) /
                  log(make_real(pattern.n(), work));
    r.margin = r.row_bound - raw;
    std::set<std::size_t> counts;
    for (int j = 0; j < pattern.m(); ++j) counts.insert(pattern.row_count(j));
    r.non_uniform = counts.size() > 1;
    if (r.non_uniform) {
        r.strict_holds = r.margin > HighReal(make_real(Rational(1, 10'000'000'000LL), work));
        r.note = r.strict_holds ? "non-uniform fibres: dim K - 1 < log N / log n"
                                : "non-uniform fibres but the strict inequality failed";
    } else {
        r.note = "uniform fibres";
    }
    for (HighReal* v : {&r.dim, &r.dim_minus_one, &r.row_bound, &r.margin}) v->precision(digits10);
    return r;
}

}  // namespace carpet
