#pragma once

#include <optional>
#include <vector>

#include "eplab/surd.hpp"
#include "eplab/types.hpp"

namespace eplab {

/// Couplings z_1..z_J of an n x n (n = 2J) model Hamiltonian.
///
/// Values are always available as doubles. When the couplings are known
/// exactly they are also kept as rationals, which the exact polynomial and
/// Jordan-chain routines require.
class ZParams
{
public:
    /// Exact couplings. Throws InvalidDimension for odd/nonpositive n or a
    /// length mismatch.
    static ZParams exact(int n, std::vector<Rational> z);
    static ZParams integers(int n, std::vector<long long> const& z);
    /// Couplings known only approximately (e.g. built from irrational data).
    static ZParams approximate(int n, std::vector<double> z);

    int n() const noexcept { return n_; }
    int half() const noexcept { return n_ / 2; }

    /// z_j for j = 1..J.
    double operator()(int j) const { return values_.at(static_cast<std::size_t>(j - 1)); }
    std::vector<double> const& values() const noexcept { return values_; }

    bool has_exact() const noexcept { return exact_.has_value(); }
    /// Throws UnsupportedExact when no exact values are attached.
    std::vector<Rational> const& exact_values() const;

    bool strictly_increasing() const;

private:
    ZParams(int n, std::vector<double> values, std::optional<std::vector<Rational>> exact);

    int n_ = 0;
    std::vector<double> values_;
    std::optional<std::vector<Rational>> exact_;
};

void check_dimension(int n);

/// z_j(t) = j (n - j) - t. The double overload treats t as the exact binary
/// value it holds, so the result still carries exact couplings.
ZParams z_of_t(int n, double t);
ZParams z_of_t(int n, Rational const& t);

/// 1-based coupling index j = min(p, n - p) of off-diagonal position p.
inline int coupling_index(int n, int p) { return p < n - p ? p : n - p; }

/// Tridiagonal H^(n): diag_k = 2k - 1 - n, H(p, p+1) = a_j, H(p+1, p) = -a_j.
class Hamiltonian
{
public:
    int n() const noexcept { return z_.n(); }
    ZParams const& z() const noexcept { return z_; }

    std::vector<double> const& diag() const noexcept { return diag_; }
    /// Superdiagonal, entry p-1 holds H(p, p+1).
    std::vector<Complex> const& sup() const noexcept { return sup_; }
    std::vector<Complex> const& sub() const noexcept { return sub_; }
    /// Sign (+1 / -1) applied to the principal square root for each a_j.
    std::vector<int> const& branch() const noexcept { return branch_; }

    /// a_j as an exact surd (requires exact couplings).
    Surd coupling_exact(int j) const;
    Surd sup_exact(int p) const;
    Surd sub_exact(int p) const { return -sup_exact(p); }

    CMatrix dense() const;
    /// max(|diag|, |offdiag|), the natural magnitude for tolerances.
    double scale() const noexcept { return scale_; }

private:
    friend Hamiltonian build_hamiltonian(ZParams const& z, std::vector<int> const& branch);

    explicit Hamiltonian(ZParams z) : z_(std::move(z)) {}

    ZParams z_;
    std::vector<double> diag_;
    std::vector<Complex> sup_;
    std::vector<Complex> sub_;
    std::vector<int> branch_;
    double scale_ = 0.0;
};

/// a_j = +sqrt(z_j) for z_j >= 0 and +i sqrt(|z_j|) for z_j < 0.
Hamiltonian build_hamiltonian(ZParams const& z);
/// Same with a_j multiplied by branch[j-1] in {+1, -1}.
Hamiltonian build_hamiltonian(ZParams const& z, std::vector<int> const& branch);

struct IndexRange
{
    int begin = 0;
    int size = 0;

    int end() const noexcept { return begin + size; }
};

/// Hermitian A (m x m), non-Hermitian C (2k x 2k), Hermitian B (m x m).
struct Partition
{
    int m = 0;
    int k = 0;
    IndexRange a;
    IndexRange c;
    IndexRange b;
    /// Whether the A-C and C-B coupling elements are nonzero.
    bool coupled = true;
};

/// m counts the couplings with z_j <= 0. Throws UnsupportedPartition when z
/// is not strictly increasing.
Partition partition(ZParams const& z);

struct Blocks
{
    CMatrix a;
    CMatrix c;
    CMatrix b;
};

/// Throws BlocksNotDecoupled when p.coupled.
Blocks extract_blocks(Hamiltonian const& h, Partition const& p);

/// A (+) C (+) B.
CMatrix direct_sum(Blocks const& blocks);

/// Antidiagonal unit matrix.
CMatrix parity(int n);

} // namespace eplab
