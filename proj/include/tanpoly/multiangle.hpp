#ifndef TANPOLY_MULTIANGLE_HPP
#define TANPOLY_MULTIANGLE_HPP

#include <optional>
#include <string>

#include "tanpoly/exact.hpp"

namespace tanpoly {

/// Either a finite rational value of tan or a pole.
class TanValue {
public:
    static TanValue finite(Rational value) { return TanValue(std::move(value)); }
    static TanValue pole() { return TanValue(); }

    /// p/q, or a pole when q == 0. p and q must not both vanish.
    static TanValue from_ratio(const Int& p, const Int& q);

    bool is_pole() const noexcept { return !value_.has_value(); }
    /// Precondition: !is_pole().
    const Rational& value() const { return *value_; }

    TanValue operator-() const;

    /// The exact value, or "pole".
    std::string str() const;

    friend bool operator==(const TanValue&, const TanValue&) = default;

private:
    TanValue() = default;
    explicit TanValue(Rational value) : value_(std::move(value)) {}

    std::optional<Rational> value_;
};

/// Alternating binomial sums of the multiple-angle formula:
/// numerator = sum_k (-1)^k C(n,2k+1) t^(2k+1), denominator = sum_k (-1)^k C(n,2k) t^(2k).
struct BeelerSums {
    Rational numerator;
    Rational denominator;
};

BeelerSums beeler_sums(unsigned n, const Rational& t);

/// tan(n arctan t) as numerator/denominator of beeler_sums; n = 0 gives 0.
TanValue tan_beeler(unsigned n, const Rational& t);

/// Iterates u <- (u + t) / (1 - u t) from u = 0, n times, on projective
/// ratios so intermediate poles pass through.
TanValue tan_addition_oracle(unsigned n, const Rational& t);

/// With t = p/q: Im((q + i p)^n) / Re((q + i p)^n).
TanValue tan_gaussian_oracle(unsigned n, const Rational& t);

/// Largest |den| magnitude below which tan_float_check declines to compare.
inline constexpr double kFloatPoleThreshold = 1e-6;

/// |tan_beeler(n, t) - tan(n * atan(t))| in double precision, or nullopt at or
/// near a pole. Throws std::invalid_argument for n == 0.
std::optional<double> tan_float_check(unsigned n, const Rational& t);

}  // namespace tanpoly

#endif
