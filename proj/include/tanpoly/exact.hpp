#ifndef TANPOLY_EXACT_HPP
#define TANPOLY_EXACT_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tanpoly {

// Arbitrary-precision signed integer. Zero has no sign.
using Int = boost::multiprecision::cpp_int;

class division_by_zero : public std::domain_error {
public:
    division_by_zero() : std::domain_error("division by zero") {}
};

Int factorial(unsigned n);
Int int_pow(const Int& base, unsigned exponent);
std::string to_string(const Int& value);

/// Exact fraction num/den, always stored in lowest terms with den > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int value) : num_(std::move(value)), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {}
    /// Throws division_by_zero when den == 0.
    Rational(Int num, Int den);

    const Int& num() const noexcept { return num_; }
    const Int& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    int sign() const noexcept { return num_.sign(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational&, const Rational&) = default;

    double to_double() const;

    /// "p" when den == 1, otherwise "p/q".
    std::string str() const;

    /// Accepts "p" or "p/q" with an optional leading sign on p and q > 0.
    static std::optional<Rational> parse(std::string_view text);

private:
    void normalize();

    Int num_;
    Int den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational rat_pow(const Rational& base, unsigned exponent);

/// Gaussian integer re + i*im.
struct GaussianInt {
    Int re{0};
    Int im{0};

    friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

GaussianInt operator+(const GaussianInt& a, const GaussianInt& b);
GaussianInt operator-(const GaussianInt& a, const GaussianInt& b);
GaussianInt gauss_mul(const GaussianInt& a, const GaussianInt& b);
inline GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) { return gauss_mul(a, b); }
GaussianInt gauss_pow(GaussianInt base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const GaussianInt& g);

}  // namespace tanpoly

#endif
