#pragma once

#include <vector>

#include "eplab/polynomial.hpp"

namespace eplab {

struct RootFinderOptions
{
    /// Sweeps over all roots before giving up.
    int max_iterations = 200;
};

/// All roots of p (with multiplicity) by Aberth-Ehrlich simultaneous
/// iteration from a fixed circular start. Exactly-zero trailing
/// coefficients are deflated as exact zero roots first.
///
/// A root is accepted once |p(z)| falls under the rounding-error bound of
/// Horner evaluation, so clustered roots stop at their attainable accuracy
/// instead of spinning. Throws ConvergenceError (with the current
/// approximations) when the cap is reached.
std::vector<Complex> polynomial_roots(Polynomial<Complex> const& p, RootFinderOptions const& opts = {});
std::vector<Complex> polynomial_roots(Polynomial<double> const& p, RootFinderOptions const& opts = {});

} // namespace eplab
