#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eplab/spectra.hpp"

namespace eplab {

struct SweepOptions
{
    int n = 8;
    double t_min = -1.0;
    double t_max = 18.0;
    /// Number of grid points, endpoints included.
    int steps = 400;
    Method method = Method::PolyRoots;
    double real_tol = kDefaultRealTol;
    double cluster_tol = kDefaultClusterTol;
    /// Worker threads; the output does not depend on it.
    int jobs = 1;
};

struct SweepRecord
{
    double t = 0.0;
    /// Sorted by (real, imag); NaN when the solver failed at this point.
    std::vector<Complex> eigenvalues;
    int m = 0;
    int k = 0;
    /// -1 when the solver failed.
    int n_real = 0;
    std::optional<std::string> error;
};

/// t_i = t_min + (t_max - t_min) i / (steps - 1), with t_max hit exactly.
std::vector<double> sweep_grid(double t_min, double t_max, int steps);

SweepRecord sweep_point(int n, double t, Method method, double real_tol, double cluster_tol);

/// Records in grid order. Throws InvalidArgument for steps < 2, t_min >= t_max
/// or jobs < 1; solver failures are stored in the affected record.
std::vector<SweepRecord> sweep(SweepOptions const& opts);

} // namespace eplab
