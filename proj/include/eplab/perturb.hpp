#pragma once

#include <optional>
#include <span>
#include <vector>

#include "eplab/jordan.hpp"
#include "eplab/polynomial.hpp"

namespace eplab {

/// W = Q^-1 H Q - S for a Hamiltonian H near the EP at which (Q, S) was built.
struct PerturbationData
{
    CMatrix w;
    /// Size N of the leading Jordan block.
    int ep_order = 0;
    /// W(1..N, 1).
    CVector first_column;
    /// |W(N, 1)| <= ft_tol * max|W|.
    bool fine_tuned = false;

    /// Leading N x N block of W, acting on the Jordan chain.
    CMatrix chain_block() const { return w.topLeftCorner(ep_order, ep_order); }
    Complex w_n1() const { return first_column(ep_order - 1); }
};

inline constexpr double kFineTuneTol = 1e-10;
/// Reciprocal condition (of the row/column equilibrated Q) below which the
/// similarity transform is refused.
inline constexpr double kMinRcond = 1e-14;

/// Accepts any square h of the dimension of jf.q. Throws ConditioningError
/// for a numerically singular q.
PerturbationData perturbation_matrix(CMatrix const& h, JordanForm const& jf,
                                     double ft_tol = kFineTuneTol);

template <typename T>
using DenseMatrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

/// Unit lower-bidiagonal L(eps) with -eps on the subdiagonal.
template <typename T>
DenseMatrix<T> build_L(T const& eps, int n)
{
    DenseMatrix<T> l = DenseMatrix<T>::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        l(i, i) = T(1);
        if (i > 0)
            l(i, i - 1) = -eps;
    }
    return l;
}

/// R(eps) = L(eps)^-1, R(i, j) = eps^(i-j) for i >= j.
template <typename T>
DenseMatrix<T> build_R(T const& eps, int n)
{
    DenseMatrix<T> r = DenseMatrix<T>::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        T power(1);
        for (int i = j; i < n; ++i) {
            r(i, j) = power;
            power = power * eps;
        }
    }
    return r;
}

/// W without its first column, padded with a zero last column.
CMatrix build_Z(CMatrix const& w);

struct ResolventSolution
{
    CVector y;
    /// y_N; the eigenvalue condition is that it vanishes.
    Complex residual;
};

/// Solves (L(eps) + Z) y = r with r = (eps - W11, -W21, ..., -WN1).
/// order = k keeps the terms sum_{j<=k} (-R Z)^j R r of the resolvent
/// series; std::nullopt solves exactly (SingularSystem if L + Z is
/// singular).
ResolventSolution resolvent_solve(CMatrix const& w, Complex eps, std::optional<int> order);

/// eps^N - W11 eps^(N-1) - W21 eps^(N-2) - ... - WN1, from the first column
/// of the N x N matrix w.
Polynomial<Complex> secular_leading(CMatrix const& w);

struct UnfoldingPrediction
{
    /// w^(1/N) exp(2 pi i n / N), n = 1..N, principal root arg in [0, 2pi/N).
    std::vector<Complex> ring;
    double radius = 0.0;
    int real_on_ring = 0;
};

/// Leading-order ring of the N eigenvalues splitting off an EP(N).
UnfoldingPrediction unfold_ring(Complex w_n1, int big_n, double real_tol = 1e-9);

enum class UnfoldingStatus { Applicable, FineTuned };

struct UnfoldingOutcome
{
    UnfoldingStatus status = UnfoldingStatus::Applicable;
    std::optional<UnfoldingPrediction> prediction;
};

/// The ring prediction, or FineTuned when W(N, 1) vanishes and the
/// leading-order formula does not determine the splitting.
UnfoldingOutcome predict_unfolding(PerturbationData const& data);

/// max over eigenvalues of the distance to the nearest ring member.
double ring_deviation(std::span<Complex const> eigenvalues, UnfoldingPrediction const& p);

} // namespace eplab
