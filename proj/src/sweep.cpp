#include "eplab/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "eplab/error.hpp"

namespace eplab {

std::vector<double> sweep_grid(double t_min, double t_max, int steps)
{
    if (steps < 2)
        throw InvalidArgument("sweep: steps must be >= 2");
    if (!(t_min < t_max))
        throw InvalidArgument("sweep: t-min must be below t-max");
    std::vector<double> grid(static_cast<std::size_t>(steps));
    double const span = t_max - t_min;
    for (int i = 0; i < steps; ++i)
        grid[static_cast<std::size_t>(i)] = t_min + span * i / (steps - 1);
    grid.back() = t_max;
    return grid;
}

SweepRecord sweep_point(int n, double t, Method method, double real_tol, double cluster_tol)
{
    SweepRecord rec;
    rec.t = t;
    ZParams const z = z_of_t(n, t);
    Partition const p = partition(z);
    rec.m = p.m;
    rec.k = p.k;
    try {
        Spectrum const s = classify(eigenvalues(build_hamiltonian(z), method), real_tol, cluster_tol);
        rec.eigenvalues = sorted_eigenvalues(s.values);
        rec.n_real = s.real_count.value_or(0);
    } catch (Error const& e) {
        double const nan = std::numeric_limits<double>::quiet_NaN();
        rec.eigenvalues.assign(static_cast<std::size_t>(n), Complex(nan, nan));
        rec.n_real = -1;
        rec.error = e.what();
    }
    return rec;
}

std::vector<SweepRecord> sweep(SweepOptions const& opts)
{
    check_dimension(opts.n);
    if (opts.jobs < 1)
        throw InvalidArgument("sweep: jobs must be >= 1");
    std::vector<double> const grid = sweep_grid(opts.t_min, opts.t_max, opts.steps);
    std::vector<SweepRecord> out(grid.size());

    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < grid.size(); i += stride)
            out[i] = sweep_point(opts.n, grid[i], opts.method, opts.real_tol, opts.cluster_tol);
    };
    auto const jobs = std::min<std::size_t>(static_cast<std::size_t>(opts.jobs), grid.size());
    if (jobs == 1) {
        work(0, 1);
        return out;
    }
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w)
        workers.emplace_back(work, w, jobs);
    workers.clear();
    return out;
}

} // namespace eplab
