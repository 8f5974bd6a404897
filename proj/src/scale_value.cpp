#include "carpet/errors.hpp"
#include "carpet/similitude.hpp"

#include <gmp.h>

namespace carpet {

namespace {

constexpr unsigned long kTrialLimit = 1'000'000;

// Prime factorization by trial division. Cofactors left above the trial
// limit are accepted only when they test prime.
std::map<BigInt, unsigned> factorize(BigInt n) {
    std::map<BigInt, unsigned> out;
    if (n < 2) return out;
    auto strip = [&](unsigned long p) {
        while (n % p == 0) {
            ++out[BigInt(p)];
            n /= p;
        }
    };
    strip(2);
    unsigned long d = 3;
    for (; d <= kTrialLimit && BigInt(d) * d <= n; d += 2) strip(d);
    if (n > 1) {
        if (BigInt(d) * d > n || mpz_probab_prime_p(n.backend().data(), 30) > 0) {
            ++out[n];
        } else {
            throw ResourceError("cannot factor " + n.str() + " within the trial-division budget");
        }
    }
    return out;
}

bool is_prime(const BigInt& p) { return p >= 2 && mpz_probab_prime_p(p.backend().data(), 30) > 0; }

void add_into(ScaleValue::ExponentMap& acc, const BigInt& p, const Rational& e) {
    Rational& slot = acc[p];
    slot += e;
    if (slot == 0) acc.erase(p);
}

}  // namespace

ScaleValue ScaleValue::from_rational(const Rational& q) {
    if (q <= 0) throw DomainError("scale values must be positive, got " + q.str());
    ScaleValue s;
    for (const auto& [p, e] : factorize(numerator(q))) add_into(s.exponents_, p, Rational(e));
    for (const auto& [p, e] : factorize(denominator(q))) add_into(s.exponents_, p, -Rational(e));
    return s;
}

ScaleValue ScaleValue::power(const BigInt& base, const Rational& exponent) {
    if (base < 1) throw DomainError("power base must be positive, got " + base.str());
    ScaleValue s;
    for (const auto& [p, e] : factorize(base)) add_into(s.exponents_, p, Rational(e) * exponent);
    return s;
}

ScaleValue ScaleValue::from_exponents(const ExponentMap& exponents) {
    ScaleValue s;
    for (const auto& [p, e] : exponents) {
        if (!is_prime(p)) throw DomainError("exponent map key " + p.str() + " is not prime");
        add_into(s.exponents_, p, e);
    }
    return s;
}

bool ScaleValue::is_rational() const {
    for (const auto& [p, e] : exponents_) {
        if (!is_integer(e)) return false;
    }
    return true;
}

Rational ScaleValue::to_rational() const {
    if (!is_rational()) throw UnsupportedError("scale " + str() + " is irrational");
    Rational v(1);
    for (const auto& [p, e] : exponents_) {
        const BigInt k = numerator(e);
        v *= rpow(Rational(p), static_cast<int>(k.convert_to<long>()));
    }
    return v;
}

ScaleValue ScaleValue::operator*(const ScaleValue& other) const {
    ScaleValue s = *this;
    for (const auto& [p, e] : other.exponents_) add_into(s.exponents_, p, e);
    return s;
}

ScaleValue ScaleValue::pow(const Rational& r) const {
    ScaleValue s;
    if (r == 0) return s;
    for (const auto& [p, e] : exponents_) s.exponents_.emplace(p, e * r);
    return s;
}

HighReal ScaleValue::log(unsigned digits10) const {
    HighReal acc = make_real(0, digits10);
    for (const auto& [p, e] : exponents_) {
        acc += make_real(e, digits10) * bmp::log(HighReal(p, digits10));
    }
    return acc;
}

std::string ScaleValue::str() const {
    if (is_rational()) return to_rational().str();
    std::string out;
    for (const auto& [p, e] : exponents_) {
        if (!out.empty()) out += '*';
        out += p.str() + "^" + e.str();
    }
    return out;
}

std::optional<Rational> log_commensurable(const ScaleValue& lambda, const ScaleValue& base) {
    if (base.is_one()) throw DomainError("log_commensurable: base must not be 1");
    if (lambda.is_one()) return Rational(0);
    const auto& le = lambda.exponents();
    const auto& be = base.exponents();
    if (le.size() != be.size()) return std::nullopt;
    std::optional<Rational> ratio;
    for (auto li = le.begin(), bi = be.begin(); li != le.end(); ++li, ++bi) {
        if (li->first != bi->first) return std::nullopt;
        const Rational r = li->second / bi->second;
        if (ratio && *ratio != r) return std::nullopt;
        ratio = r;
    }
    return ratio;
}

}  // namespace carpet
