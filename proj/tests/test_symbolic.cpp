#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tanpoly/symbolic.hpp"
#include "tanpoly/triangles.hpp"

using namespace tanpoly;

namespace {

YZPoly term(long c, unsigned a, unsigned b)
{
    return YZPoly::monomial(c, a, b);
}

YPoly ypoly(std::initializer_list<std::pair<unsigned, long>> terms)
{
    YPoly p;
    for (const auto& [e, c] : terms)
        p.add_term(e, c);
    return p;
}

YZPoly random_yzpoly(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> count(0, 5);
    std::uniform_int_distribution<unsigned> exponent(0, 6);
    std::uniform_int_distribution<int> coefficient(-12, 12);
    YZPoly p;
    for (int i = count(rng); i > 0; --i)
        p.add_term({exponent(rng), exponent(rng)}, coefficient(rng));
    return p;
}

}  // namespace

TEST_CASE("sparse storage drops zeros")
{
    YZPoly p = term(3, 1, 2);
    p += term(-3, 1, 2);
    CHECK(p.is_zero());
    CHECK(YZPoly::constant(0).is_zero());
    YPoly q = ypoly({{2, 5}, {2, -5}, {0, 1}});
    CHECK(q.size() == 1);
    CHECK(q == YPoly::constant(1));
}

TEST_CASE("diff")
{
    CHECK(diff(YZPoly::z()) == term(1, 1, 1));
    CHECK(diff(YZPoly::y()) == term(1, 0, 2));
    CHECK(diff(YZPoly::constant(1)).is_zero());
    CHECK(diff(term(1, 1, 3)) == term(1, 0, 5) + term(3, 2, 3));
}

TEST_CASE("product rule on random inputs")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const YZPoly p = random_yzpoly(rng);
        const YZPoly q = random_yzpoly(rng);
        CHECK(diff(p * q) == diff(p) * q + p * diff(q));
    }
}

TEST_CASE("Dz operator")
{
    CHECK(apply_dz(YZPoly::z()) == term(2, 1, 2));
    CHECK(apply_dz(YZPoly::y()) == term(1, 2, 1) + term(1, 0, 3));
    CHECK(apply_dz(term(2, 1, 2)) == term(6, 2, 3) + term(2, 0, 5));

    CHECK(dz_iter(0, YZPoly::z()) == YZPoly::z());
    CHECK(dz_iter(1, YZPoly::y()) == term(1, 2, 1) + term(1, 0, 3));
    CHECK(dz_iter(2, YZPoly::z()) == term(6, 2, 3) + term(2, 0, 5));
}

TEST_CASE("expansion coefficients are M and N")
{
    for (unsigned n = 0; n <= 15; ++n) {
        YZPoly expect_z, expect_y;
        for (long k = 0; k <= static_cast<long>(n) / 2; ++k)
            expect_z.add_term({n - 2 * static_cast<unsigned>(k), n + 2 * static_cast<unsigned>(k) + 1}, M_closed(n, k));
        for (long k = 0; k <= (static_cast<long>(n) + 1) / 2; ++k)
            expect_y.add_term({n - 2 * static_cast<unsigned>(k) + 1, n + 2 * static_cast<unsigned>(k)}, N_closed(n, k));
        CHECK(dz_iter(n, YZPoly::z()) == expect_z);
        CHECK(dz_iter(n, YZPoly::y()) == expect_y);
    }
}

TEST_CASE("reduce_z")
{
    CHECK(reduce_z(term(1, 0, 2)) == ReducedPair{ypoly({{0, 1}, {2, 1}}), {}});
    CHECK(reduce_z(term(1, 3, 0)) == ReducedPair{ypoly({{3, 1}}), {}});
    CHECK(reduce_z(term(2, 1, 2)) == ReducedPair{ypoly({{1, 2}, {3, 2}}), {}});
    CHECK(reduce_z(term(1, 0, 3)) == ReducedPair{{}, ypoly({{0, 1}, {2, 1}})});
    CHECK(reduce_z(YZPoly{}) == ReducedPair{});
}

TEST_CASE("embed then reduce is the identity")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const ReducedPair r = reduce_z(random_yzpoly(rng));
        CHECK(reduce_z(embed(r)) == r);
    }
}

TEST_CASE("reduced_diff")
{
    CHECK(reduced_diff({YPoly::y(), {}}) == ReducedPair{ypoly({{0, 1}, {2, 1}}), {}});
    CHECK(reduced_diff({{}, YPoly::constant(1)}) == ReducedPair{{}, YPoly::y()});
    CHECK(reduced_diff({{}, YPoly::y()}) == ReducedPair{{}, ypoly({{0, 1}, {2, 2}})});
}

TEST_CASE("quotient compatibility on random inputs")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        const YZPoly p = random_yzpoly(rng);
        CHECK(reduce_z(diff(p)) == reduced_diff(reduce_z(p)));
    }
}

TEST_CASE("Hoffman polynomials")
{
    CHECK(hoffman_P(0) == YPoly::y());
    CHECK(hoffman_Q(0) == YPoly::constant(1));
    CHECK(hoffman_P(2) == ypoly({{1, 2}, {3, 2}}));
    CHECK(hoffman_P(3) == ypoly({{0, 2}, {2, 8}, {4, 6}}));
    CHECK(hoffman_P(4) == ypoly({{1, 16}, {3, 40}, {5, 24}}));
    CHECK(hoffman_Q(3) == ypoly({{1, 5}, {3, 6}}));
    CHECK(hoffman_Q(4) == ypoly({{0, 5}, {2, 28}, {4, 24}}));

    YZPoly dy = YZPoly::y(), dzz = YZPoly::z();
    for (unsigned n = 0; n <= 15; ++n) {
        CHECK(reduce_z(dy) == ReducedPair{hoffman_P(n), {}});
        CHECK(reduce_z(dzz) == ReducedPair{{}, hoffman_Q(n)});
        dy = diff(dy);
        dzz = diff(dzz);
    }
}

TEST_CASE("R_n and T_n closed forms")
{
    CHECK(R_poly_closed(1) == ypoly({{0, 1}}));
    CHECK(R_poly_closed(2) == ypoly({{1, 2}, {3, 2}}));
    CHECK(R_poly_closed(3) == ypoly({{0, 1}, {2, 5}, {4, 4}}));
    CHECK(R_poly_closed(4) == ypoly({{1, 4}, {3, 16}, {5, 20}, {7, 8}}));
    CHECK(R_poly_closed(5) == ypoly({{0, 1}, {2, 14}, {4, 41}, {6, 44}, {8, 16}}));
    CHECK(T_poly_closed(1) == ypoly({{1, 1}}));
    CHECK(T_poly_closed(2) == ypoly({{0, 1}, {2, 2}}));
    CHECK(T_poly_closed(3) == ypoly({{1, 3}, {3, 7}, {5, 4}}));
    CHECK(T_poly_closed(4) == ypoly({{0, 1}, {2, 9}, {4, 16}, {6, 8}}));
    CHECK(R_poly_closed(6) == ypoly({{1, 6}, {3, 50}, {5, 146}, {7, 198}, {9, 128}, {11, 32}}));
    CHECK_THROWS_AS(R_poly_closed(0), std::invalid_argument);
    CHECK_THROWS_AS(T_poly_closed(0), std::invalid_argument);
}

TEST_CASE("R_n and T_n from the Dz expansion")
{
    CHECK(R_poly_dz(1) == YPoly::constant(1));
    CHECK(T_poly_dz(2) == ypoly({{0, 1}, {2, 2}}));
    CHECK(R_poly_dz(4) == ypoly({{1, 4}, {3, 16}, {5, 20}, {7, 8}}));
    CHECK_THROWS_AS(R_poly_dz(0), std::invalid_argument);
    CHECK_THROWS_AS(T_poly_dz(0), std::invalid_argument);

    for (unsigned n = 1; n <= 15; ++n) {
        CHECK(R_poly_closed(n) == R_poly_dz(n));
        CHECK(T_poly_closed(n) == T_poly_dz(n));
    }
}

TEST_CASE("exact division guards extraction")
{
    CHECK(ypoly({{0, 6}, {2, 4}}).exact_div(2) == ypoly({{0, 3}, {2, 2}}));
    CHECK_THROWS_AS(ypoly({{0, 6}, {2, 3}}).exact_div(2), internal_inconsistency);
}

TEST_CASE("tilde polynomials have one parity and n terms")
{
    for (unsigned n = 1; n <= 15; ++n) {
        const YPoly rt = n % 2 == 0 ? T_poly_dz(n) : R_poly_dz(n);
        const YPoly tt = n % 2 == 0 ? R_poly_dz(n) : T_poly_dz(n);
        CHECK(rt.size() == n);
        CHECK(tt.size() == n);
        for (const auto& [e, c] : rt.terms())
            CHECK(e % 2 == 0);
        for (const auto& [e, c] : tt.terms())
            CHECK(e % 2 == 1);
    }
}
