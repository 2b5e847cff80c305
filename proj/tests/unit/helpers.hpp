#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "eplab/spectra.hpp"

namespace testing {

using eplab::Complex;

/// Largest elementwise distance after sorting both sets by (re, im).
inline double sorted_distance(std::vector<Complex> a, std::vector<Complex> b)
{
    if (a.size() != b.size())
        return std::numeric_limits<double>::infinity();
    a = eplab::sorted_eigenvalues(std::move(a));
    b = eplab::sorted_eigenvalues(std::move(b));
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

inline double max_abs(eplab::CMatrix const& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

} // namespace testing
