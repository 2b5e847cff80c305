#include "eplab/eplocus.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eplab/error.hpp"
#include "eplab/jordan.hpp"
#include "eplab/spectra.hpp"

namespace eplab {

ZParams ep_params(int n)
{
    check_dimension(n);
    std::vector<long long> z;
    for (long long k = 1; k <= n / 2; ++k)
        z.push_back(k * (n - k));
    return ZParams::integers(n, z);
}

EpIdentityReport verify_ep_identity(int n, int cap)
{
    check_dimension(n);
    if (n > cap)
        throw CapExceeded("exact EP verification capped at n = " + std::to_string(cap));
    return verify_ep_identity(ep_params(n), cap);
}

EpIdentityReport verify_ep_identity(ZParams const& z, int cap)
{
    if (z.n() > cap)
        throw CapExceeded("exact EP verification capped at n = " + std::to_string(cap));
    Polynomial<Rational> const p = char_poly_exact(build_hamiltonian(z));
    EpIdentityReport r;
    r.coeffs = p.coeffs;
    r.holds = p.leading() == 1
        && std::all_of(p.coeffs.begin(), p.coeffs.end() - 1, [](Rational const& c) { return c == 0; });
    return r;
}

EpCascade ep_cascade(int n)
{
    check_dimension(n);
    EpCascade c;
    c.n = n;
    c.times.push_back(0);
    c.orders.push_back(n);
    for (long long j = 1; j <= n / 2; ++j) {
        c.times.push_back(j * (n - j));
        c.orders.push_back(static_cast<int>(n - 2 * j));
    }
    return c;
}

bool lemma4_check(long long j, long long n)
{
    if (n < 4 || n % 2 != 0 || j < 2 || j > n / 2)
        throw InvalidArgument("lemma4_check needs even n >= 4 and 2 <= j <= n/2");
    BigInt const lhs = BigInt(j) * (n - j);
    BigInt const rhs = BigInt(j - 1) * (n - 2 - (j - 1)) + (n - 1);
    return lhs == rhs;
}

namespace {

int cascade_index(EpCascade const& c, long long t_star)
{
    auto it = std::find(c.times.begin(), c.times.end(), t_star);
    if (it == c.times.end())
        throw NotEpTime("t = " + std::to_string(t_star) + " is not a decoupling time of n = "
                        + std::to_string(c.n));
    return static_cast<int>(it - c.times.begin());
}

} // namespace

bool inner_block_is_ep(int n, long long t_star)
{
    EpCascade const c = ep_cascade(n);
    int const idx = cascade_index(c, t_star);
    int const order = c.orders[static_cast<std::size_t>(idx)];
    if (order == 0)
        throw NotEpTime("t = " + std::to_string(t_star) + " leaves no non-Hermitian block");
    ZParams const z = z_of_t(n, Rational(t_star));
    std::vector<Rational> positive;
    for (auto const& v : z.exact_values())
        if (v > 0)
            positive.push_back(v);
    return positive == ep_params(order).exact_values();
}

NearEpReport near_ep_check(int n, double t, double tol)
{
    EpCascade const c = ep_cascade(n);
    std::size_t nearest = 0;
    for (std::size_t i = 1; i < c.times.size(); ++i)
        if (std::abs(static_cast<double>(c.times[i]) - t) < std::abs(static_cast<double>(c.times[nearest]) - t))
            nearest = i;

    NearEpReport r;
    r.expected_order = c.orders[nearest];

    ZParams const z = z_of_t(n, t);
    Hamiltonian const h = build_hamiltonian(z);
    Spectrum const s = classify(eigenvalues(h), kDefaultRealTol, tol);
    double const scale = spectral_scale(s.values);
    for (Cluster const& cl : s.clusters)
        if (std::abs(cl.center) <= tol * (1.0 + scale))
            r.cluster_multiplicity = cl.multiplicity;

    int const order = r.expected_order;
    if (order > 0) {
        int const m = (n - order) / 2;
        CMatrix const block = h.dense().block(m, m, order, order);
        r.chain_residual = chain_relative_residual(block, Complex(0.0));
    }
    r.is_near_ep = r.cluster_multiplicity == r.expected_order && r.chain_residual <= tol;
    return r;
}

} // namespace eplab
