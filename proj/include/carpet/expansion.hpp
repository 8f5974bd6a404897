#pragma once

#include "carpet/rational.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace carpet {

// A digit word  d_1 d_2 ...  = preperiod followed by period repeated forever,
// read as sum d_k base^-k. Always held in canonical form: the period is
// primitive and the preperiod is as short as possible.
class EventuallyPeriodicDigits {
public:
    EventuallyPeriodicDigits(int base, std::vector<int> preperiod, std::vector<int> period);

    // Constant word d d d ...
    static EventuallyPeriodicDigits constant(int base, int digit) { return {base, {}, {digit}}; }

    // "12(01)" = 1 2 0 1 0 1 ...; digits 0-9 then a-z (base <= 36).
    static EventuallyPeriodicDigits parse(int base, std::string_view text);

    int base() const noexcept { return base_; }
    const std::vector<int>& preperiod() const noexcept { return preperiod_; }
    const std::vector<int>& period() const noexcept { return period_; }

    // 1-based position.
    int digit_at(std::size_t k) const;
    Rational value() const;
    std::string str() const;

    friend bool operator==(const EventuallyPeriodicDigits&, const EventuallyPeriodicDigits&) = default;

private:
    int base_;
    std::vector<int> preperiod_;
    std::vector<int> period_;
};

// Every base-`base` expansion of x in [0, 1]: one, or two when x is a
// nonzero base-adic rational below 1. The terminating (...0^inf) expansion
// comes first. ResourceError if a period would exceed max_period digits.
std::vector<EventuallyPeriodicDigits> expansions(const Rational& x, int base, std::size_t max_period = 1u << 22);

// Length of the combined preperiod and a common period for aligned scans
// over several words: checking positions 1..prefix+period covers every
// distinct tuple of digits.
struct AlignedSpan {
    std::size_t prefix = 0;
    std::size_t period = 1;
    std::size_t total() const { return prefix + period; }
};
AlignedSpan aligned_span(const EventuallyPeriodicDigits& a, const EventuallyPeriodicDigits& b);

}  // namespace carpet
