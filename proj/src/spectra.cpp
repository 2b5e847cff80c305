#include "eplab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "eplab/charpoly.hpp"
#include "eplab/error.hpp"

namespace eplab {

std::string_view to_string(Method m)
{
    return m == Method::PolyRoots ? "poly" : "dense";
}

Method parse_method(std::string_view name)
{
    if (name == "poly")
        return Method::PolyRoots;
    if (name == "dense")
        return Method::Dense;
    throw InvalidArgument("unknown method '" + std::string(name) + "' (expected poly or dense)");
}

std::vector<Complex> dense_eigenvalues(CMatrix const& m)
{
    if (m.rows() != m.cols())
        throw InvalidDimension("dense_eigenvalues: matrix is not square");
    if (m.rows() == 0)
        return {};
    Eigen::ComplexEigenSolver<CMatrix> solver(m, false);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("dense eigensolver did not converge", {});
    auto const& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

Spectrum eigenvalues(Hamiltonian const& h, Method method, RootFinderOptions const& opts)
{
    if (h.n() > kMaxFloatDimension)
        throw InvalidDimension("floating-point spectra are limited to n <= "
                               + std::to_string(kMaxFloatDimension));
    Spectrum s;
    s.method = method;
    if (method == Method::Dense) {
        s.values = dense_eigenvalues(h.dense());
        return s;
    }

    // Exact couplings give exact coefficients, rounded once; this keeps the
    // odd terms exactly zero and the clustered roots near an EP accurate.
    Polynomial<double> const q = h.z().has_exact() ? to_double(even_reduce(char_poly_exact(h)))
                                                   : even_reduce(char_poly(h));
    std::vector<Complex> sroots;
    try {
        sroots = polynomial_roots(q, opts);
    } catch (ConvergenceError const& e) {
        std::vector<Complex> partial;
        for (Complex r : e.partial()) {
            partial.push_back(std::sqrt(r));
            partial.push_back(-std::sqrt(r));
        }
        throw ConvergenceError(e.what(), std::move(partial));
    }
    s.values.reserve(2 * sroots.size());
    for (Complex r : sroots) {
        // A real s keeps a signed-zero imaginary part from the root finder;
        // drop it so s < 0 maps onto the positive imaginary axis.
        if (r.imag() == 0.0)
            r = Complex(r.real(), 0.0);
        Complex const e = std::sqrt(r);
        s.values.push_back(e);
        s.values.push_back(-e);
    }
    return s;
}

double spectral_scale(std::span<Complex const> values)
{
    double m = 0.0;
    for (Complex v : values)
        m = std::max(m, std::abs(v));
    return m;
}

Spectrum classify(Spectrum s, double real_tol, double cluster_tol)
{
    int real = 0;
    for (Complex e : s.values)
        real += std::abs(e.imag()) <= real_tol * (1.0 + std::abs(e)) ? 1 : 0;
    s.real_count = real;

    std::size_t const n = s.values.size();
    double const gap = cluster_tol * (1.0 + spectral_scale(s.values));
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i)
            i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(s.values[i] - s.values[j]) <= gap)
                parent[find(j)] = find(i);

    std::vector<std::size_t> roots_seen;
    std::vector<Cluster> clusters;
    std::vector<Complex> sums;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t const r = find(i);
        auto it = std::find(roots_seen.begin(), roots_seen.end(), r);
        if (it == roots_seen.end()) {
            roots_seen.push_back(r);
            clusters.push_back({Complex(0.0), 0});
            sums.push_back(Complex(0.0));
            it = roots_seen.end() - 1;
        }
        auto const idx = static_cast<std::size_t>(it - roots_seen.begin());
        clusters[idx].multiplicity += 1;
        sums[idx] += s.values[i];
    }
    for (std::size_t c = 0; c < clusters.size(); ++c)
        clusters[c].center = sums[c] / static_cast<double>(clusters[c].multiplicity);
    std::stable_sort(clusters.begin(), clusters.end(), [](Cluster const& x, Cluster const& y) {
        if (x.center.real() != y.center.real())
            return x.center.real() < y.center.real();
        return x.center.imag() < y.center.imag();
    });
    s.clusters = std::move(clusters);
    return s;
}

double hausdorff_distance(std::span<Complex const> a, std::span<Complex const> b)
{
    auto directed = [](std::span<Complex const> from, std::span<Complex const> to) {
        double worst = 0.0;
        for (Complex x : from) {
            double best = std::numeric_limits<double>::infinity();
            for (Complex y : to)
                best = std::min(best, std::abs(x - y));
            worst = std::max(worst, best);
        }
        return worst;
    };
    if (a.empty() || b.empty())
        return a.empty() && b.empty() ? 0.0 : std::numeric_limits<double>::infinity();
    return std::max(directed(a, b), directed(b, a));
}

CrossCheckReport cross_check(Hamiltonian const& h, double tol)
{
    CrossCheckReport r;
    r.poly = eigenvalues(h, Method::PolyRoots);
    r.dense = eigenvalues(h, Method::Dense);
    r.distance = hausdorff_distance(r.poly.values, r.dense.values);
    double const scale = std::max(spectral_scale(r.poly.values), spectral_scale(r.dense.values));
    r.threshold = tol * (1.0 + scale);
    r.pass = r.distance <= r.threshold;
    return r;
}

std::vector<Complex> sorted_eigenvalues(std::vector<Complex> values)
{
    std::stable_sort(values.begin(), values.end(), [](Complex x, Complex y) {
        if (x.real() != y.real())
            return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return values;
}

} // namespace eplab
