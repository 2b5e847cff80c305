#include "eplab/charpoly.hpp"

#include <cmath>
#include <string>

#include "eplab/error.hpp"

namespace eplab {

Polynomial<double> char_poly(Hamiltonian const& h)
{
    int const n = h.n();
    std::vector<double> products(static_cast<std::size_t>(n - 1));
    for (int p = 1; p < n; ++p)
        products[static_cast<std::size_t>(p - 1)] = -h.z()(coupling_index(n, p));
    return tridiagonal_char_poly(h.diag(), products);
}

Polynomial<Rational> char_poly_exact(Hamiltonian const& h)
{
    int const n = h.n();
    std::vector<Rational> diag;
    diag.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        diag.emplace_back(2 * k - 1 - n);
    std::vector<Rational> products;
    products.reserve(static_cast<std::size_t>(n - 1));
    for (int p = 1; p < n; ++p) {
        Surd const prod = h.sup_exact(p) * h.sub_exact(p);
        if (!prod.is_rational())
            throw UnsupportedExact("off-diagonal product is not rational at position "
                                   + std::to_string(p));
        products.push_back(prod.coeff());
    }
    return tridiagonal_char_poly(diag, products);
}

Polynomial<Complex> char_poly_band(Hamiltonian const& h)
{
    int const n = h.n();
    std::vector<Complex> diag(h.diag().begin(), h.diag().end());
    std::vector<Complex> products(static_cast<std::size_t>(n - 1));
    for (std::size_t p = 0; p + 1 < static_cast<std::size_t>(n); ++p)
        products[p] = h.sup()[p] * h.sub()[p];
    return tridiagonal_char_poly(diag, products);
}

Polynomial<Rational> even_reduce(Polynomial<Rational> const& p)
{
    Polynomial<Rational> q;
    q.variable = Variable::S;
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        if (i % 2 == 0) {
            q.coeffs.push_back(p.coeffs[i]);
        } else if (p.coeffs[i] != 0) {
            throw NotEven("odd coefficient of E^" + std::to_string(i) + " is nonzero",
                          p.coeffs[i].convert_to<double>());
        }
    }
    return q;
}

Polynomial<double> even_reduce(Polynomial<double> const& p, double rel_tol)
{
    double const limit = rel_tol * max_abs_coeff(p);
    Polynomial<double> q;
    q.variable = Variable::S;
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        if (i % 2 == 0) {
            q.coeffs.push_back(p.coeffs[i]);
        } else if (std::abs(p.coeffs[i]) > limit) {
            throw NotEven("odd coefficient of E^" + std::to_string(i) + " exceeds tolerance",
                          p.coeffs[i]);
        }
    }
    return q;
}

} // namespace eplab
