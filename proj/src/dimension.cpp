#include "carpet/dimension.hpp"

#include <mpfr.h>

namespace carpet {

namespace {

// c^(a/b) for a positive integer c and a/b in (0, 1].
HighReal rational_power(std::size_t c, const Rational& r, unsigned digits10) {
    const BigInt a = numerator(r);
    const BigInt b = denominator(r);
    HighReal base(ipow(BigInt(c), static_cast<unsigned>(a.convert_to<unsigned long>())), digits10);
    HighReal out(0, digits10);
    mpfr_rootn_ui(out.backend().data(), base.backend().data(), b.convert_to<unsigned long>(), MPFR_RNDN);
    return out;
}

}  // namespace

HighReal hausdorff_dimension(const CarpetPattern& pattern, unsigned digits10) {
    const unsigned work = digits10 + 10;
    const auto exact = log_commensurable(ScaleValue::from_rational(Rational(pattern.m())),
                                         ScaleValue::from_rational(Rational(pattern.n())));
    const HighReal log_m = bmp::log(make_real(pattern.m(), work));
    HighReal theta(0, work);
    if (!exact) theta = log_m / bmp::log(make_real(pattern.n(), work));

    HighReal sum(0, work);
    for (int j = 0; j < pattern.m(); ++j) {
        const std::size_t c = pattern.row_count(j);
        if (c == 0) continue;
        if (exact) {
            sum += rational_power(c, *exact, work);
        } else {
            sum += bmp::pow(make_real(static_cast<long>(c), work), theta);
        }
    }
    HighReal dim = bmp::log(sum) / log_m;
    dim.precision(digits10);
    return dim;
}

}  // namespace carpet
