#pragma once

// Shared fixtures and brute-force oracles for the unit and acceptance tests.
// Oracles deliberately avoid the library's algorithms: they work from raw
// integer digit arithmetic and direct enumeration.

#include "carpet/pattern.hpp"
#include "carpet/similitude.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace carpet::testing {

inline CarpetPattern ex51() { return parse_pattern("4 4\n0 1\n1 3\n2 0\n3 2\n"); }
inline CarpetPattern p32() { return parse_pattern("3 2\n0 0\n2 0\n1 1\n"); }
inline CarpetPattern full_row_42() { return parse_pattern("4 2\n0 0\n1 0\n2 0\n3 0\n"); }
inline CarpetPattern l_shape() { return parse_pattern("2 2\n0 0\n0 1\n1 0\n"); }
inline CarpetPattern diagonal22() { return parse_pattern("2 2\n0 0\n1 1\n"); }
inline CarpetPattern full22() { return parse_pattern("2 2\n0 0\n0 1\n1 0\n1 1\n", true); }
inline CarpetPattern sierpinski33() {
    return parse_pattern("3 3\n0 0\n1 0\n2 0\n0 1\n2 1\n0 2\n1 2\n2 2\n");
}
inline CarpetPattern bm42() { return parse_pattern("4 2\n0 0\n3 0\n1 1\n2 1\n3 1\n"); }
inline CarpetPattern bm93() { return parse_pattern("9 3\n0 0\n4 0\n8 0\n2 1\n3 1\n7 2\n"); }
inline CarpetPattern bm53() { return parse_pattern("5 3\n0 0\n1 0\n4 0\n2 1\n0 2\n3 2\n4 2\n"); }

// Base-b digits of a (most significant first), padded to `len`.
inline std::vector<int> digits_of(std::uint64_t a, int b, unsigned len) {
    std::vector<int> d(len, 0);
    for (unsigned k = len; k-- > 0;) {
        d[k] = static_cast<int>(a % static_cast<std::uint64_t>(b));
        a /= static_cast<std::uint64_t>(b);
    }
    return d;
}

// Membership of (a / n^k, c / m^k) in K by enumerating the two candidate
// expansions of each coordinate straight from integer digits: the digits of
// a followed by 0^inf, or the digits of a - 1 followed by (n - 1)^inf.
inline bool brute_member_adic(const CarpetPattern& p, std::uint64_t a, std::uint64_t c, unsigned k) {
    struct Word {
        std::vector<int> head;
        int tail;
    };
    auto candidates = [k](std::uint64_t v, int b) {
        std::uint64_t full = 1;
        for (unsigned t = 0; t < k; ++t) full *= static_cast<std::uint64_t>(b);
        std::vector<Word> out;
        if (v < full) out.push_back({digits_of(v, b, k), 0});
        if (v > 0) out.push_back({digits_of(v - 1, b, k), b - 1});
        return out;
    };
    for (const auto& wx : candidates(a, p.n())) {
        for (const auto& wy : candidates(c, p.m())) {
            bool ok = p.has(wx.tail, wy.tail);
            for (unsigned t = 0; ok && t < k; ++t) ok = p.has(wx.head[t], wy.head[t]);
            if (ok) return true;
        }
    }
    return false;
}

// Level-k cells by enumerating every word of length k.
inline std::set<std::pair<std::uint64_t, std::uint64_t>> brute_cells(const CarpetPattern& p, unsigned k) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> out;
    const auto& ds = p.digits();
    std::vector<std::size_t> idx(k, 0);
    while (true) {
        std::uint64_t x = 0;
        std::uint64_t y = 0;
        for (unsigned t = 0; t < k; ++t) {
            x = x * static_cast<std::uint64_t>(p.n()) + static_cast<std::uint64_t>(ds[idx[t]].i);
            y = y * static_cast<std::uint64_t>(p.m()) + static_cast<std::uint64_t>(ds[idx[t]].j);
        }
        out.insert({x, y});
        unsigned t = k;
        while (t > 0 && ++idx[t - 1] == ds.size()) idx[--t] = 0;
        if (t == 0) break;
    }
    return out;
}

// (pattern, base-m slice word) pairs where every row the word visits has at
// least two digits.
inline std::vector<std::pair<CarpetPattern, std::string>> wide_slice_cases() {
    return {{p32(), "(0)"},           {bm42(), "(0)"},  {bm42(), "(1)"},  {bm42(), "(01)"},
            {bm42(), "1(0)"},         {bm93(), "(01)"}, {bm93(), "(0)"},  {bm53(), "(02)"},
            {sierpinski33(), "(1)"},  {sierpinski33(), "(012)"}};
}

// z lies in the closed union of the level-k cells, with cells taken from
// brute_cells. Failing at any level disproves membership in K.
inline bool brute_in_level(const CarpetPattern& p, const Point2& z, unsigned k) {
    if (z.x < 0 || z.x > 1 || z.y < 0 || z.y > 1) return false;
    Rational W(1), H(1);
    for (unsigned t = 0; t < k; ++t) {
        W *= p.n();
        H *= p.m();
    }
    const auto all = brute_cells(p, k);
    auto candidates = [](const Rational& v) {
        std::vector<std::uint64_t> out;
        const BigInt f = numerator(v) / denominator(v);
        if (f * denominator(v) == numerator(v) && f > 0) out.push_back((f - 1).convert_to<std::uint64_t>());
        out.push_back(f.convert_to<std::uint64_t>());
        return out;
    };
    for (auto a : candidates(z.x * W)) {
        for (auto b : candidates(z.y * H)) {
            if (all.count({a, b})) return true;
        }
    }
    return false;
}

inline bool brute_disproves(const CarpetPattern& p, const Point2& z, unsigned max_level) {
    for (unsigned k = 0; k <= max_level; ++k) {
        if (!brute_in_level(p, z, k)) return true;
    }
    return false;
}

// Every (O, sigma) with O d - sigma(d) constant, found by trying all digit
// permutations; no centroid argument involved.
inline std::vector<std::pair<RationalOrthogonal, std::map<Digit, Digit>>> brute_symmetries(const CarpetPattern& p, int h) {
    std::vector<std::pair<RationalOrthogonal, std::map<Digit, Digit>>> out;
    const auto& ds = p.digits();
    for (const auto& o : enumerate_rational_orthogonals(h)) {
        std::vector<std::size_t> perm(ds.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::optional<Point2> shift;
            bool ok = true;
            for (std::size_t k = 0; k < ds.size() && ok; ++k) {
                const Point2 od = o.apply({Rational(ds[k].i), Rational(ds[k].j)});
                const Point2 c{Rational(ds[perm[k]].i) - od.x, Rational(ds[perm[k]].j) - od.y};
                if (!shift) shift = c;
                ok = *shift == c;
            }
            if (ok) {
                std::map<Digit, Digit> sigma;
                for (std::size_t k = 0; k < ds.size(); ++k) sigma.emplace(ds[k], ds[perm[k]]);
                out.emplace_back(o, sigma);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

inline std::vector<CarpetPattern> valid_patterns() {
    return {ex51(), p32(), full_row_42(), l_shape(), diagonal22(), sierpinski33(), bm42(), bm93(), bm53()};
}

}  // namespace carpet::testing
