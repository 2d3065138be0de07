#ifndef TANPOLY_TRIANGLES_HPP
#define TANPOLY_TRIANGLES_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "tanpoly/exact.hpp"
#include "tanpoly/report.hpp"

namespace tanpoly {

enum class Family { R, T, M, N, Rtilde, Ttilde };

std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

struct TriangleRow {
    unsigned n = 0;
    std::vector<Int> entries;

    friend bool operator==(const TriangleRow&, const TriangleRow&) = default;
};

/// C(n, k); zero when k < 0 or k > n.
Int binom(unsigned n, long k);

/// R(n,k) = C(n, 2k+1), the tangent numerator coefficients.
Int R_coef(unsigned n, long k);
/// T(n,k) = C(n, 2k), the tangent denominator coefficients.
Int T_coef(unsigned n, long k);

// Largest k carrying a (possibly) nonzero entry in row n.
// R: floor((n-1)/2) (row 0 is empty), T and M: floor(n/2), N: floor((n+1)/2).
long max_index(Family family, unsigned n);

/// Number of entries in row n of the given family.
std::size_t row_length(Family family, unsigned n);

/// Index of the first row of a family: 0 for R, T, M, N and 1 for the tilde triangles.
unsigned first_row(Family family);

/// Rows 0..max_n of the M triangle, built by the recurrence
/// M(n+1,k) = (n+2k+2) M(n,k) + (n-2k+2) M(n,k-1), M(0,0) = 1.
std::vector<TriangleRow> M_rows(unsigned max_n);
/// Rows 0..max_n of the N triangle, built by the recurrence
/// N(n+1,k) = (n+2k+1) N(n,k) + (n-2k+3) N(n,k-1), N(0,0) = 1.
std::vector<TriangleRow> N_rows(unsigned max_n);

Int M_rec(unsigned n, long k);
Int N_rec(unsigned n, long k);

/// n! * R(n+1, k)
Int M_closed(unsigned n, long k);
/// n! * T(n+1, k)
Int N_closed(unsigned n, long k);

/// Coefficients of y^(2k-2), k = 1..n, read off the derivative polynomial
/// T_n (n even) or R_n (n odd). Throws std::invalid_argument for n == 0.
TriangleRow tilde_R_row(unsigned n);
/// Coefficients of y^(2k-1), k = 1..n, read off R_n (n even) or T_n (n odd).
TriangleRow tilde_T_row(unsigned n);

/// Row n of any family.
TriangleRow triangle_row(Family family, unsigned n);
/// `count` consecutive rows starting at first_row(family).
std::vector<TriangleRow> triangle_rows(Family family, unsigned count);

/// Checks n R(n+1,k) = (n+2k+1) R(n,k) + (n-2k+1) R(n,k-1) and
/// n T(n+1,k) = (n+2k) T(n,k) + (n-2k+2) T(n,k-1) for 1 <= n <= max_n.
VerifyReport verify_RT_recurrences(unsigned max_n);

/// Compares the recurrence rows of M and N with their factorial-binomial
/// closed forms for 0 <= n <= max_n over each family's full index range.
VerifyReport verify_corollary(unsigned max_n);

}  // namespace tanpoly

#endif
