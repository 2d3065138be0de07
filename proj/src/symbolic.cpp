#include "tanpoly/symbolic.hpp"

#include <vector>

#include "tanpoly/triangles.hpp"

namespace tanpoly {

namespace {

template <class Map, class Key>
void accumulate(Map& terms, const Key& key, const Int& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms.erase(it);
    }
}

template <class Map, class Key>
Int lookup(const Map& terms, const Key& key)
{
    auto it = terms.find(key);
    return it == terms.end() ? Int(0) : it->second;
}

}  // namespace

// ---- YPoly ------------------------------------------------------------------

YPoly YPoly::constant(const Int& c)
{
    return monomial(c, 0);
}

YPoly YPoly::monomial(const Int& c, unsigned exponent)
{
    YPoly p;
    p.add_term(exponent, c);
    return p;
}

YPoly YPoly::one_plus_y2()
{
    YPoly p;
    p.add_term(0, 1);
    p.add_term(2, 1);
    return p;
}

void YPoly::add_term(unsigned exponent, const Int& c)
{
    accumulate(terms_, exponent, c);
}

Int YPoly::coefficient(unsigned exponent) const
{
    return lookup(terms_, exponent);
}

YPoly YPoly::derivative() const
{
    YPoly d;
    for (const auto& [e, c] : terms_)
        if (e != 0)
            d.add_term(e - 1, c * e);
    return d;
}

YPoly YPoly::exact_div(const Int& d) const
{
    if (d.is_zero())
        throw division_by_zero();
    YPoly q;
    for (const auto& [e, c] : terms_) {
        if (c % d != 0)
            throw internal_inconsistency("coefficient " + c.str() + " of y^" + std::to_string(e) +
                                         " is not divisible by " + d.str());
        q.terms_.emplace(e, c / d);
    }
    return q;
}

YPoly& YPoly::operator+=(const YPoly& rhs)
{
    for (const auto& [e, c] : rhs.terms_)
        accumulate(terms_, e, c);
    return *this;
}

YPoly& YPoly::operator-=(const YPoly& rhs)
{
    for (const auto& [e, c] : rhs.terms_)
        accumulate(terms_, e, Int(-c));
    return *this;
}

YPoly operator*(const YPoly& lhs, const YPoly& rhs)
{
    YPoly product;
    for (const auto& [a, ca] : lhs.terms_)
        for (const auto& [b, cb] : rhs.terms_)
            accumulate(product.terms_, a + b, Int(ca * cb));
    return product;
}

YPoly operator*(YPoly lhs, const Int& c)
{
    if (c.is_zero())
        return {};
    for (auto& [e, coef] : lhs.terms_)
        coef *= c;
    return lhs;
}

YPoly one_plus_y2_pow(unsigned j)
{
    YPoly result = YPoly::constant(1);
    const YPoly base = YPoly::one_plus_y2();
    for (unsigned i = 0; i < j; ++i)
        result = result * base;
    return result;
}

// ---- YZPoly -----------------------------------------------------------------

YZPoly YZPoly::constant(const Int& c)
{
    return monomial(c, 0, 0);
}

YZPoly YZPoly::monomial(const Int& c, unsigned y_exp, unsigned z_exp)
{
    YZPoly p;
    p.add_term({y_exp, z_exp}, c);
    return p;
}

void YZPoly::add_term(Monomial m, const Int& c)
{
    accumulate(terms_, m, c);
}

Int YZPoly::coefficient(Monomial m) const
{
    return lookup(terms_, m);
}

YZPoly& YZPoly::operator+=(const YZPoly& rhs)
{
    for (const auto& [m, c] : rhs.terms_)
        accumulate(terms_, m, c);
    return *this;
}

YZPoly& YZPoly::operator-=(const YZPoly& rhs)
{
    for (const auto& [m, c] : rhs.terms_)
        accumulate(terms_, m, Int(-c));
    return *this;
}

YZPoly operator*(const YZPoly& lhs, const YZPoly& rhs)
{
    YZPoly product;
    for (const auto& [ma, ca] : lhs.terms_)
        for (const auto& [mb, cb] : rhs.terms_)
            accumulate(product.terms_, Monomial{ma.y + mb.y, ma.z + mb.z}, Int(ca * cb));
    return product;
}

// ---- derivation -------------------------------------------------------------

YZPoly diff(const YZPoly& p)
{
    YZPoly d;
    for (const auto& [m, c] : p.terms()) {
        if (m.y != 0)
            d.add_term({m.y - 1, m.z + 2}, c * m.y);
        if (m.z != 0)
            d.add_term({m.y + 1, m.z}, c * m.z);
    }
    return d;
}

YZPoly apply_dz(const YZPoly& p)
{
    return diff(YZPoly::z() * p);
}

YZPoly dz_iter(unsigned n, YZPoly seed)
{
    for (unsigned i = 0; i < n; ++i)
        seed = apply_dz(seed);
    return seed;
}

ReducedPair reduce_z(const YZPoly& p)
{
    std::vector<YPoly> powers{YPoly::constant(1)};
    const YPoly base = YPoly::one_plus_y2();
    auto power = [&](unsigned j) -> const YPoly& {
        while (powers.size() <= j)
            powers.push_back(powers.back() * base);
        return powers[j];
    };

    ReducedPair out;
    for (const auto& [m, c] : p.terms()) {
        YPoly term = power(m.z / 2) * YPoly::monomial(c, m.y);
        if (m.z % 2 == 0)
            out.f += term;
        else
            out.g += term;
    }
    return out;
}

YZPoly embed(const ReducedPair& p)
{
    YZPoly out;
    for (const auto& [e, c] : p.f.terms())
        out.add_term({e, 0}, c);
    for (const auto& [e, c] : p.g.terms())
        out.add_term({e, 1}, c);
    return out;
}

ReducedPair reduced_diff(const ReducedPair& p)
{
    const YPoly w = YPoly::one_plus_y2();
    return {w * p.f.derivative(), YPoly::y() * p.g + w * p.g.derivative()};
}

YPoly hoffman_P(unsigned n)
{
    YPoly p = YPoly::y();
    const YPoly w = YPoly::one_plus_y2();
    for (unsigned i = 0; i < n; ++i)
        p = w * p.derivative();
    return p;
}

YPoly hoffman_Q(unsigned n)
{
    YPoly q = YPoly::constant(1);
    const YPoly w = YPoly::one_plus_y2();
    for (unsigned i = 0; i < n; ++i)
        q = w * q.derivative() + YPoly::y() * q;
    return q;
}

// ---- R_n, T_n ---------------------------------------------------------------

namespace {

void require_positive_index(unsigned n, const char* what)
{
    if (n == 0)
        throw std::invalid_argument(std::string(what) + " is defined for n >= 1");
}

// sum_{k=0}^{k_max} coef(n,k) y^(n-2k-shift) (1+y^2)^(base+k)
template <class Coef>
YPoly closed_form(unsigned n, long k_max, unsigned shift, unsigned base, Coef coef)
{
    std::vector<YPoly> powers{one_plus_y2_pow(base)};
    const YPoly w = YPoly::one_plus_y2();
    YPoly out;
    for (long k = 0; k <= k_max; ++k) {
        if (k > 0)
            powers.push_back(powers.back() * w);
        const unsigned y_exp = n - 2 * static_cast<unsigned>(k) - shift;
        out += powers[static_cast<std::size_t>(k)] * YPoly::monomial(coef(n, k), y_exp);
    }
    return out;
}

// Splits (Dz)^(n-1)(seed) into (n-1)! times the polynomial living on the
// side selected by `on_z`; the other side must vanish.
YPoly extract(unsigned n, const YZPoly& seed, bool on_z, const char* what)
{
    ReducedPair pair = reduce_z(dz_iter(n - 1, seed));
    const YPoly& kept = on_z ? pair.g : pair.f;
    const YPoly& zero = on_z ? pair.f : pair.g;
    if (!zero.is_zero())
        throw internal_inconsistency(std::string(what) + std::to_string(n) +
                                     ": reduced expansion has mass on the wrong parity side");
    return kept.exact_div(factorial(n - 1));
}

}  // namespace

YPoly R_poly_closed(unsigned n)
{
    require_positive_index(n, "R_n");
    return closed_form(n, (static_cast<long>(n) - 1) / 2, 1, n / 2, R_coef);
}

YPoly T_poly_closed(unsigned n)
{
    require_positive_index(n, "T_n");
    return closed_form(n, static_cast<long>(n) / 2, 0, (n - 1) / 2, T_coef);
}

YPoly R_poly_dz(unsigned n)
{
    require_positive_index(n, "R_n");
    return extract(n, YZPoly::z(), n % 2 == 1, "R_");
}

YPoly T_poly_dz(unsigned n)
{
    require_positive_index(n, "T_n");
    return extract(n, YZPoly::y(), n % 2 == 0, "T_");
}

}  // namespace tanpoly
