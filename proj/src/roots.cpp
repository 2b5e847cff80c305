#include "eplab/roots.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "eplab/error.hpp"

namespace eplab {

namespace {

struct Evaluation
{
    Complex value;
    Complex derivative;
    double bound; // sum |a_i| |z|^i
};

Evaluation evaluate(std::vector<Complex> const& a, Complex z)
{
    Complex p = a.back();
    Complex dp = 0.0;
    double const r = std::abs(z);
    double bound = std::abs(a.back());
    for (std::size_t i = a.size() - 1; i-- > 0;) {
        dp = dp * z + p;
        p = p * z + a[i];
        bound = bound * r + std::abs(a[i]);
    }
    return {p, dp, bound};
}

} // namespace

std::vector<Complex> polynomial_roots(Polynomial<Complex> const& poly, RootFinderOptions const& opts)
{
    std::vector<Complex> a = poly.coeffs;
    while (!a.empty() && a.back() == Complex(0.0))
        a.pop_back();
    if (a.empty())
        throw InvalidArgument("polynomial_roots: zero polynomial");

    std::vector<Complex> roots;
    std::size_t zeros = 0;
    while (zeros + 1 < a.size() && a[zeros] == Complex(0.0))
        ++zeros;
    roots.assign(zeros, Complex(0.0));
    a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(zeros));

    int const degree = static_cast<int>(a.size()) - 1;
    if (degree == 0)
        return roots;
    if (degree == 1) {
        roots.push_back(-a[0] / a[1]);
        return roots;
    }

    // Start on a circle of radius (|a0|/|an|)^(1/d), the geometric mean of the
    // root moduli, rotated off the real axis.
    double const radius = std::pow(std::abs(a.front()) / std::abs(a.back()), 1.0 / degree);
    std::vector<Complex> z(static_cast<std::size_t>(degree));
    for (int k = 0; k < degree; ++k) {
        double const angle = 2.0 * std::numbers::pi * k / degree + 0.4;
        z[static_cast<std::size_t>(k)] = std::polar(radius, angle);
    }

    double const eps = std::numeric_limits<double>::epsilon();
    double const mu = 4.0 * (degree + 1) * eps;
    std::vector<bool> done(z.size(), false);
    std::size_t remaining = z.size();

    for (int iter = 0; iter < opts.max_iterations && remaining > 0; ++iter) {
        for (std::size_t k = 0; k < z.size(); ++k) {
            if (done[k])
                continue;
            Evaluation const ev = evaluate(a, z[k]);
            if (std::abs(ev.value) <= mu * ev.bound) {
                done[k] = true;
                --remaining;
                continue;
            }
            Complex sum = 0.0;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != k)
                    sum += 1.0 / (z[k] - z[j]);
            Complex step;
            if (ev.derivative == Complex(0.0)) {
                // Stationary point: nudge away deterministically.
                step = Complex(-1e-3 * (1.0 + std::abs(z[k])), 1e-3 * (1.0 + std::abs(z[k])));
            } else {
                Complex const newton = ev.value / ev.derivative;
                step = newton / (1.0 - newton * sum);
            }
            z[k] -= step;
        }
    }
    roots.insert(roots.end(), z.begin(), z.end());
    if (remaining > 0)
        throw ConvergenceError("Aberth iteration did not converge within "
                                   + std::to_string(opts.max_iterations) + " sweeps",
                               roots);
    return roots;
}

std::vector<Complex> polynomial_roots(Polynomial<double> const& p, RootFinderOptions const& opts)
{
    Polynomial<Complex> c;
    c.variable = p.variable;
    c.coeffs.assign(p.coeffs.begin(), p.coeffs.end());
    return polynomial_roots(c, opts);
}

} // namespace eplab
