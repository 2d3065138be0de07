#include "tanpoly/multiangle.hpp"

#include <cmath>
#include <stdexcept>

#include "tanpoly/triangles.hpp"

namespace tanpoly {

TanValue TanValue::from_ratio(const Int& p, const Int& q)
{
    if (q.is_zero()) {
        if (p.is_zero())
            throw std::invalid_argument("0:0 is not a projective point");
        return pole();
    }
    return finite(Rational(p, q));
}

TanValue TanValue::operator-() const
{
    return is_pole() ? *this : finite(-*value_);
}

std::string TanValue::str() const
{
    return is_pole() ? "pole" : value_->str();
}

BeelerSums beeler_sums(unsigned n, const Rational& t)
{
    const Rational t2 = t * t;
    BeelerSums sums{Rational(0), Rational(0)};
    Rational t_odd = t;      // t^(2k+1)
    Rational t_even = 1;     // t^(2k)
    for (long k = 0; k <= static_cast<long>(n) / 2; ++k) {
        const Rational sign = k % 2 == 0 ? 1 : -1;
        sums.numerator += sign * Rational(R_coef(n, k)) * t_odd;
        sums.denominator += sign * Rational(T_coef(n, k)) * t_even;
        t_odd *= t2;
        t_even *= t2;
    }
    return sums;
}

TanValue tan_beeler(unsigned n, const Rational& t)
{
    const BeelerSums sums = beeler_sums(n, t);
    if (sums.denominator.is_zero())
        return TanValue::pole();
    return TanValue::finite(sums.numerator / sums.denominator);
}

TanValue tan_addition_oracle(unsigned n, const Rational& t)
{
    // u = p/q, t = a/b:  (u + t) / (1 - u t) = (p b + a q) / (q b - p a).
    // The map has determinant a^2 + b^2 > 0, so (p, q) never collapses to (0, 0).
    const Int& a = t.num();
    const Int& b = t.den();
    Int p = 0;
    Int q = 1;
    for (unsigned i = 0; i < n; ++i) {
        Int next_p = p * b + a * q;
        Int next_q = q * b - p * a;
        Int g = boost::multiprecision::gcd(next_p, next_q);
        p = next_p / g;
        q = next_q / g;
    }
    return TanValue::from_ratio(p, q);
}

TanValue tan_gaussian_oracle(unsigned n, const Rational& t)
{
    const GaussianInt power = gauss_pow({t.den(), t.num()}, n);
    return TanValue::from_ratio(power.im, power.re);
}

std::optional<double> tan_float_check(unsigned n, const Rational& t)
{
    if (n == 0)
        throw std::invalid_argument("float check requires n >= 1");
    const BeelerSums sums = beeler_sums(n, t);
    if (sums.denominator.is_zero() || std::abs(sums.denominator.to_double()) < kFloatPoleThreshold)
        return std::nullopt;
    const double exact = (sums.numerator / sums.denominator).to_double();
    const double reference = std::tan(static_cast<double>(n) * std::atan(t.to_double()));
    return std::abs(exact - reference);
}

}  // namespace tanpoly
