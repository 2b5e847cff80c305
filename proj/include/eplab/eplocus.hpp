#pragma once

#include <vector>

#include "eplab/charpoly.hpp"
#include "eplab/model.hpp"

namespace eplab {

/// z_k = k (n - k), k = 1..n/2: the couplings at which H^(n) collapses to a
/// single n-fold exceptional point.
ZParams ep_params(int n);

struct EpIdentityReport
{
    bool holds = false;
    /// Exact characteristic polynomial coefficients, constant term first.
    std::vector<Rational> coeffs;
};

inline constexpr int kDefaultExactCap = 64;

/// Exact check that det(H - E I) = E^n at ep_params(n), or at any other
/// exact couplings. Throws CapExceeded for n > cap.
EpIdentityReport verify_ep_identity(int n, int cap = kDefaultExactCap);
EpIdentityReport verify_ep_identity(ZParams const& z, int cap = kDefaultExactCap);

/// Decoupling times {0} u {j (n - j)} and the EP order 2K of the central
/// block at each of them (0 once the matrix is fully Hermitian).
struct EpCascade
{
    int n = 0;
    std::vector<long long> times;
    std::vector<int> orders;
};

EpCascade ep_cascade(int n);

/// j (n - j) == (j - 1)(n - 2 - (j - 1)) + (n - 1), in exact integers.
/// Requires 2 <= j <= n/2 and even n >= 4 (InvalidArgument otherwise).
bool lemma4_check(long long j, long long n);

/// Whether the positive couplings of z_of_t(n, t_star) are exactly
/// ep_params(2K). Throws NotEpTime unless t_star is a cascade time below
/// (n/2)^2.
bool inner_block_is_ep(int n, long long t_star);

/// Floating-point screening for sweeps. Compares the multiplicity of the
/// eigenvalue cluster at 0 with the order expected at the nearest cascade
/// time and measures the relative Jordan-chain residual of the central
/// block.
struct NearEpReport
{
    int cluster_multiplicity = 0;
    int expected_order = 0;
    double chain_residual = 0.0;
    bool is_near_ep = false;
};

inline constexpr double kNearEpTol = 1e-6;

NearEpReport near_ep_check(int n, double t, double tol = kNearEpTol);

} // namespace eplab
