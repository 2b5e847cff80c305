#pragma once

#include <vector>

#include "eplab/model.hpp"
#include "eplab/polynomial.hpp"

namespace eplab {

/// det(H - E I) of a tridiagonal matrix from its diagonal and the products
/// sup_p * sub_p, via the minor recurrence
///   P_k = (d_k - E) P_{k-1} - sup_{k-1} sub_{k-1} P_{k-2}.
template <typename T>
Polynomial<T> tridiagonal_char_poly(std::vector<T> const& diag, std::vector<T> const& offdiag_products)
{
    std::vector<T> prev2{T(1)};
    std::vector<T> prev1{T(1)};
    if (diag.empty())
        return {prev1, Variable::E};
    prev1 = {diag[0], T(-1)};
    for (std::size_t k = 1; k < diag.size(); ++k) {
        std::vector<T> next(prev1.size() + 1, T(0));
        for (std::size_t i = 0; i < prev1.size(); ++i) {
            next[i] += diag[k] * prev1[i];
            next[i + 1] -= prev1[i];
        }
        T const& prod = offdiag_products[k - 1];
        for (std::size_t i = 0; i < prev2.size(); ++i)
            next[i] -= prod * prev2[i];
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return {prev1, Variable::E};
}

/// Floating-point characteristic polynomial, built from the couplings z_j
/// so that integer couplings give exact integer coefficients.
Polynomial<double> char_poly(Hamiltonian const& h);

/// Exact characteristic polynomial from the exact matrix entries.
/// Throws UnsupportedExact when h carries no exact couplings.
Polynomial<Rational> char_poly_exact(Hamiltonian const& h);

/// Floating-point characteristic polynomial from the stored band entries
/// (sup * sub products), i.e. sensitive to the chosen square-root branch
/// only through rounding.
Polynomial<Complex> char_poly_band(Hamiltonian const& h);

/// q(s) with p(E) = q(E^2). Throws NotEven when an odd coefficient is
/// nonzero (exact) or exceeds rel_tol * max|coeff| (float).
Polynomial<Rational> even_reduce(Polynomial<Rational> const& p);
Polynomial<double> even_reduce(Polynomial<double> const& p, double rel_tol = 1e-12);

/// Non-leading coefficients of det(H^(8) - E I) = E^8 + f6 E^6 + f4 E^4 + f2 E^2 + f0
/// in the N = 8 naming a_1 = sqrt(D), a_2 = sqrt(C), a_3 = sqrt(B), a_4 = sqrt(A).
template <typename T>
struct SecularCoeffsN8
{
    T f6, f4, f2, f0;

    friend bool operator==(SecularCoeffsN8 const&, SecularCoeffsN8 const&) = default;
};

template <typename T>
SecularCoeffsN8<T> secular_coeffs_n8(T const& A, T const& B, T const& C, T const& D)
{
    SecularCoeffsN8<T> f;
    f.f6 = T(-84) + 2 * D + 2 * C + 2 * B + A;
    f.f4 = 2 * C * D + 50 * D + 4 * B * D + 2 * A * D + D * D - 70 * C + 1974 - 142 * B - 83 * A
        + 2 * B * C + 2 * A * C + C * C + B * B;
    f.f2 = T(-12916) - 682 * D - 74 * B * B + 2 * B * B * D + 2006 * B - 1402 * C - 50 * C * C
        - 44 * C * D + 2 * C * B * D + 2 * C * A * D + A * C * C - 68 * A * C + 52 * A * D
        + 1891 * A + 152 * B * D - 108 * B * C + 2 * B * D * D + A * D * D - 10 * D * D;
    f.f0 = T(11025) + 630 * D + 1225 * B * B + 70 * B * B * D + 7350 * B + 1470 * C + 49 * C * C
        + 42 * C * D + 14 * C * B * D - 42 * C * A * D - 49 * A * C * C - 1470 * A * C
        - 630 * A * D - 11025 * A + 420 * B * D + 490 * B * C + 6 * B * D * D
        - 9 * A * D * D + 9 * D * D + B * B * D * D;
    return f;
}

} // namespace eplab
