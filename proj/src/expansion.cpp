#include "carpet/expansion.hpp"

#include "carpet/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace carpet {

namespace {

void canonicalize(std::vector<int>& pre, std::vector<int>& period) {
    const std::size_t len = period.size();
    for (std::size_t p = 1; p <= len; ++p) {
        if (len % p != 0) continue;
        bool repeats = true;
        for (std::size_t i = p; i < len && repeats; ++i) repeats = period[i] == period[i - p];
        if (repeats) {
            period.resize(p);
            break;
        }
    }
    while (!pre.empty() && pre.back() == period.back()) {
        pre.pop_back();
        std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
    }
}

char digit_char(int d) { return static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10)); }

int char_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
    return -1;
}

BigInt word_value(const std::vector<int>& w, int base) {
    BigInt v = 0;
    for (int d : w) v = v * base + d;
    return v;
}

}  // namespace

EventuallyPeriodicDigits::EventuallyPeriodicDigits(int base, std::vector<int> preperiod, std::vector<int> period)
    : base_(base), preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (base_ < 2) throw DomainError("digit base must be >= 2");
    if (period_.empty()) throw DomainError("period must be non-empty");
    for (const auto* w : {&preperiod_, &period_}) {
        for (int d : *w) {
            if (d < 0 || d >= base_) {
                throw DomainError("digit " + std::to_string(d) + " out of range for base " + std::to_string(base_));
            }
        }
    }
    canonicalize(preperiod_, period_);
}

EventuallyPeriodicDigits EventuallyPeriodicDigits::parse(int base, std::string_view text) {
    const auto open = text.find('(');
    const auto close = text.rfind(')');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open ||
        close + 1 != text.size()) {
        throw ParseError(0, "digit word must look like 'pre(period)', got '" + std::string(text) + "'");
    }
    auto read = [&](std::string_view s) {
        std::vector<int> out;
        for (char c : s) {
            const int d = char_digit(c);
            if (d < 0 || d >= base) throw ParseError(0, "bad digit '" + std::string(1, c) + "' in '" + std::string(text) + "'");
            out.push_back(d);
        }
        return out;
    };
    return {base, read(text.substr(0, open)), read(text.substr(open + 1, close - open - 1))};
}

int EventuallyPeriodicDigits::digit_at(std::size_t k) const {
    if (k == 0) throw DomainError("digit positions are 1-based");
    if (k <= preperiod_.size()) return preperiod_[k - 1];
    return period_[(k - preperiod_.size() - 1) % period_.size()];
}

Rational EventuallyPeriodicDigits::value() const {
    const BigInt b(base_);
    const BigInt pre = word_value(preperiod_, base_);
    const BigInt per = word_value(period_, base_);
    const BigInt cycle = ipow(b, static_cast<unsigned>(period_.size())) - 1;
    const Rational tail(per, cycle);
    return (Rational(pre) + tail) / Rational(ipow(b, static_cast<unsigned>(preperiod_.size())));
}

std::string EventuallyPeriodicDigits::str() const {
    std::string out;
    if (base_ > 36) {
        // dotted decimal digits for large bases
        auto join = [](const std::vector<int>& w) {
            std::string s;
            for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "." : "") + std::to_string(w[i]);
            return s;
        };
        return join(preperiod_) + "(" + join(period_) + ")";
    }
    for (int d : preperiod_) out += digit_char(d);
    out += '(';
    for (int d : period_) out += digit_char(d);
    out += ')';
    return out;
}

std::vector<EventuallyPeriodicDigits> expansions(const Rational& x, int base, std::size_t max_period) {
    if (base < 2) throw DomainError("digit base must be >= 2");
    if (x < 0 || x > 1) throw DomainError("expansions need x in [0, 1], got " + x.str());
    if (x == 1) return {EventuallyPeriodicDigits::constant(base, base - 1)};
    if (x == 0) return {EventuallyPeriodicDigits::constant(base, 0)};

    const BigInt den = denominator(x);
    BigInt r = numerator(x);
    std::vector<int> digits;
    std::map<BigInt, std::size_t> seen;
    while (!seen.contains(r)) {
        if (digits.size() > max_period) throw ResourceError("expansion of " + x.str() + " is too long");
        seen.emplace(r, digits.size());
        r *= base;
        const BigInt d = r / den;
        digits.push_back(static_cast<int>(d.convert_to<long>()));
        r -= d * den;
    }
    const std::size_t start = seen.at(r);
    std::vector<int> pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start));
    std::vector<int> period(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end());
    std::vector<EventuallyPeriodicDigits> out;
    out.emplace_back(base, pre, period);

    const auto& first = out.front();
    if (first.period() == std::vector<int>{0}) {
        // x = c / base^k: ... d_k 0 0 ... and ... (d_k - 1) (b-1) (b-1) ...
        std::vector<int> alt = first.preperiod();
        alt.back() -= 1;
        out.emplace_back(base, std::move(alt), std::vector<int>{base - 1});
    }
    return out;
}

AlignedSpan aligned_span(const EventuallyPeriodicDigits& a, const EventuallyPeriodicDigits& b) {
    return {std::max(a.preperiod().size(), b.preperiod().size()), std::lcm(a.period().size(), b.period().size())};
}

}  // namespace carpet
