#pragma once

#include <algorithm>
#include <cstddef>
#include <type_traits>
#include <vector>

#include "eplab/types.hpp"

namespace eplab {

/// Which indeterminate a polynomial is written in: the energy E, its square
/// s = E^2, or the shifted energy epsilon near an exceptional point.
enum class Variable { E, S, Epsilon };

/// Dense univariate polynomial, coefficients from the constant term upward.
/// The scalar type doubles as the arithmetic tag (Rational = exact).
template <typename T>
struct Polynomial
{
    std::vector<T> coeffs;
    Variable variable = Variable::E;

    int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }

    T const& operator[](std::size_t i) const { return coeffs[i]; }
    T leading() const { return coeffs.empty() ? T(0) : coeffs.back(); }

    /// Horner evaluation.
    template <typename X>
    auto operator()(X const& x) const
    {
        using R = std::common_type_t<T, X>;
        R acc{0};
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    friend bool operator==(Polynomial const&, Polynomial const&) = default;
};

template <typename T>
Polynomial<double> to_double(Polynomial<T> const& p)
{
    Polynomial<double> out;
    out.variable = p.variable;
    out.coeffs.reserve(p.coeffs.size());
    for (auto const& c : p.coeffs)
        out.coeffs.push_back(static_cast<double>(c));
    return out;
}

template <typename T>
double max_abs_coeff(Polynomial<T> const& p)
{
    using std::abs;
    double m = 0.0;
    for (auto const& c : p.coeffs)
        m = std::max(m, static_cast<double>(abs(c)));
    return m;
}

} // namespace eplab
