#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "eplab/model.hpp"
#include "eplab/roots.hpp"

namespace eplab {

enum class Method { PolyRoots, Dense };

std::string_view to_string(Method m);
/// "poly" or "dense"; throws InvalidArgument otherwise.
Method parse_method(std::string_view name);

struct Cluster
{
    Complex center;
    int multiplicity = 0;
};

struct Spectrum
{
    std::vector<Complex> values;
    Method method = Method::PolyRoots;
    /// Filled by classify().
    std::optional<int> real_count;
    std::vector<Cluster> clusters;
};

inline constexpr double kDefaultRealTol = 1e-9;
inline constexpr double kDefaultClusterTol = 1e-6;

/// All n eigenvalues of a model Hamiltonian.
///
/// PolyRoots: roots s_m of the even-reduced characteristic polynomial, then
/// E = +-sqrt(s_m) on the principal branch. The polynomial is formed in
/// exact arithmetic whenever the couplings are exact. Dense: general complex
/// eigensolve of the densified matrix.
Spectrum eigenvalues(Hamiltonian const& h, Method method = Method::PolyRoots,
                     RootFinderOptions const& opts = {});

/// Dense eigensolve of an arbitrary square matrix.
std::vector<Complex> dense_eigenvalues(CMatrix const& m);

/// E is real iff |Im E| <= real_tol (1 + |E|). Clusters by single linkage
/// with gap cluster_tol (1 + max|E|); the center is the member mean.
Spectrum classify(Spectrum s, double real_tol = kDefaultRealTol, double cluster_tol = kDefaultClusterTol);

/// Largest |E| in the set (0 for an empty set).
double spectral_scale(std::span<Complex const> values);

double hausdorff_distance(std::span<Complex const> a, std::span<Complex const> b);

struct CrossCheckReport
{
    Spectrum poly;
    Spectrum dense;
    double distance = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

/// Compares the two eigenvalue routes; pass iff the Hausdorff distance is at
/// most tol (1 + scale).
CrossCheckReport cross_check(Hamiltonian const& h, double tol);

/// Sort by (real, imag) ascending; ties keep the input order.
std::vector<Complex> sorted_eigenvalues(std::vector<Complex> values);

} // namespace eplab
