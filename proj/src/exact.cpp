#include "tanpoly/exact.hpp"

#include <cctype>

#include <boost/multiprecision/cpp_int.hpp>

namespace tanpoly {

Int factorial(unsigned n)
{
    Int result = 1;
    for (unsigned i = 2; i <= n; ++i)
        result *= i;
    return result;
}

Int int_pow(const Int& base, unsigned exponent)
{
    return boost::multiprecision::pow(base, exponent);
}

std::string to_string(const Int& value)
{
    return value.str();
}

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw division_by_zero();
    normalize();
}

void Rational::normalize()
{
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    Int g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const
{
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs)
{
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    return *this += -rhs;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.num_.is_zero())
        throw division_by_zero();
    Int n = num_ * rhs.den_;
    Int d = den_ * rhs.num_;
    num_ = std::move(n);
    den_ = std::move(d);
    normalize();
    return *this;
}

double Rational::to_double() const
{
    boost::multiprecision::cpp_rational q(num_, den_);
    return q.convert_to<double>();
}

std::string Rational::str() const
{
    if (den_ == 1)
        return num_.str();
    return num_.str() + "/" + den_.str();
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    std::string_view den_part = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);

    bool negative = false;
    if (!num_part.empty() && (num_part.front() == '-' || num_part.front() == '+')) {
        negative = num_part.front() == '-';
        num_part.remove_prefix(1);
    }
    if (!all_digits(num_part) || !all_digits(den_part))
        return std::nullopt;

    Int num{std::string(num_part)};
    Int den{std::string(den_part)};
    if (den.is_zero())
        return std::nullopt;
    if (negative)
        num = -num;
    return Rational(std::move(num), std::move(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

Rational rat_pow(const Rational& base, unsigned exponent)
{
    return Rational(int_pow(base.num(), exponent), int_pow(base.den(), exponent));
}

GaussianInt operator+(const GaussianInt& a, const GaussianInt& b)
{
    return {a.re + b.re, a.im + b.im};
}

GaussianInt operator-(const GaussianInt& a, const GaussianInt& b)
{
    return {a.re - b.re, a.im - b.im};
}

GaussianInt gauss_mul(const GaussianInt& a, const GaussianInt& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianInt gauss_pow(GaussianInt base, unsigned exponent)
{
    GaussianInt result{1, 0};
    while (exponent != 0) {
        if (exponent & 1u)
            result = gauss_mul(result, base);
        exponent >>= 1;
        if (exponent != 0)
            base = gauss_mul(base, base);
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const GaussianInt& g)
{
    return os << "(" << g.re << ", " << g.im << ")";
}

}  // namespace tanpoly
