#ifndef TANPOLY_SYMBOLIC_HPP
#define TANPOLY_SYMBOLIC_HPP

#include <compare>
#include <map>
#include <stdexcept>
#include <string>

#include "tanpoly/exact.hpp"

// Polynomials in y = tan(x) and z = sec(x) with the derivation
// D(y) = z^2, D(z) = y z, and the quotient by z^2 = 1 + y^2.

namespace tanpoly {

/// Raised when an extracted polynomial does not have the parity or
/// divisibility structure the defining expansions guarantee.
class internal_inconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Sparse polynomial in y with exact integer coefficients.
class YPoly {
public:
    using Terms = std::map<unsigned, Int>;

    YPoly() = default;

    static YPoly constant(const Int& c);
    static YPoly monomial(const Int& c, unsigned exponent);
    static YPoly y() { return monomial(1, 1); }
    /// 1 + y^2
    static YPoly one_plus_y2();

    void add_term(unsigned exponent, const Int& c);
    Int coefficient(unsigned exponent) const;
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    YPoly derivative() const;
    /// Divides every coefficient by d; throws internal_inconsistency unless exact.
    YPoly exact_div(const Int& d) const;

    YPoly& operator+=(const YPoly& rhs);
    YPoly& operator-=(const YPoly& rhs);
    friend YPoly operator+(YPoly lhs, const YPoly& rhs) { return lhs += rhs; }
    friend YPoly operator-(YPoly lhs, const YPoly& rhs) { return lhs -= rhs; }
    friend YPoly operator*(const YPoly& lhs, const YPoly& rhs);
    friend YPoly operator*(YPoly lhs, const Int& c);

    friend bool operator==(const YPoly&, const YPoly&) = default;

private:
    Terms terms_;
};

/// (1 + y^2)^j, computed by repeated multiplication.
YPoly one_plus_y2_pow(unsigned j);

/// Exponent pair y^y z^z. Ordering is ascending in y, then in z.
struct Monomial {
    unsigned y = 0;
    unsigned z = 0;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse polynomial in commuting y and z with exact integer coefficients.
class YZPoly {
public:
    using Terms = std::map<Monomial, Int>;

    YZPoly() = default;

    static YZPoly constant(const Int& c);
    static YZPoly monomial(const Int& c, unsigned y_exp, unsigned z_exp);
    static YZPoly y() { return monomial(1, 1, 0); }
    static YZPoly z() { return monomial(1, 0, 1); }

    void add_term(Monomial m, const Int& c);
    Int coefficient(Monomial m) const;
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    YZPoly& operator+=(const YZPoly& rhs);
    YZPoly& operator-=(const YZPoly& rhs);
    friend YZPoly operator+(YZPoly lhs, const YZPoly& rhs) { return lhs += rhs; }
    friend YZPoly operator-(YZPoly lhs, const YZPoly& rhs) { return lhs -= rhs; }
    friend YZPoly operator*(const YZPoly& lhs, const YZPoly& rhs);

    friend bool operator==(const YZPoly&, const YZPoly&) = default;

private:
    Terms terms_;
};

/// Canonical representative f(y) + z g(y) of a class in Z[y,z]/(z^2 - 1 - y^2).
struct ReducedPair {
    YPoly f;
    YPoly g;

    friend bool operator==(const ReducedPair&, const ReducedPair&) = default;
};

/// D extended to Z[y,z] by linearity and the product rule:
/// c y^a z^b -> c a y^(a-1) z^(b+2) + c b y^(a+1) z^b.
YZPoly diff(const YZPoly& p);

/// p -> D(z p)
YZPoly apply_dz(const YZPoly& p);

/// n-fold apply_dz; the result stays unreduced.
YZPoly dz_iter(unsigned n, YZPoly seed);

/// Replaces z^(2j) by (1+y^2)^j and z^(2j+1) by z (1+y^2)^j.
ReducedPair reduce_z(const YZPoly& p);

/// f + z g as an element of Z[y,z].
YZPoly embed(const ReducedPair& p);

/// The derivation induced on the quotient: (f, g) -> ((1+y^2) f', y g + (1+y^2) g').
ReducedPair reduced_diff(const ReducedPair& p);

/// D^n(y) = P_n(y), from P_0 = y, P_{n+1} = (1+y^2) P_n'.
YPoly hoffman_P(unsigned n);
/// D^n(z) = z Q_n(y), from Q_0 = 1, Q_{n+1} = (1+y^2) Q_n' + y Q_n.
YPoly hoffman_Q(unsigned n);

/// R_n = sum_k R(n,k) y^(n-2k-1) (1+y^2)^(floor(n/2)+k). Requires n >= 1.
YPoly R_poly_closed(unsigned n);
/// T_n = sum_k T(n,k) y^(n-2k) (1+y^2)^(floor((n-1)/2)+k). Requires n >= 1.
YPoly T_poly_closed(unsigned n);

/// R_n read off (Dz)^(n-1)(z) = (n-1)! z^(n mod 2) R_n(y) after reduction.
YPoly R_poly_dz(unsigned n);
/// T_n read off (Dz)^(n-1)(y) = (n-1)! z^(1 - n mod 2) T_n(y) after reduction.
YPoly T_poly_dz(unsigned n);

}  // namespace tanpoly

#endif
