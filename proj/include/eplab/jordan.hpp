#pragma once

#include <vector>

#include "eplab/model.hpp"
#include "eplab/surd.hpp"

namespace eplab {

struct JordanBlock
{
    int size = 1;
    Complex eigenvalue;
};

/// Canonical form S and transition matrix Q with H Q = Q S.
///
/// Column order: the 2K chain columns of the non-Hermitian block first,
/// then the eigenvectors of A (ascending eigenvalue), then those of B.
struct JordanForm
{
    std::vector<JordanBlock> blocks;
    CMatrix q;
    /// Size of the leading Jordan block (0 when the matrix is Hermitian).
    int chain_size = 0;
    /// 2-norm condition number of q.
    double condition = 0.0;
    double abs_det = 0.0;

    /// Dense block-diagonal S.
    CMatrix s() const;
};

/// E on the diagonal, ones on the superdiagonal.
CMatrix jordan_block(int size, Complex e);

inline constexpr double kChainTol = 1e-10;

/// Chain columns q_1..q_N of a single N x N Jordan block at e, seeded with
/// q_N = e_1 and q_{m-1} = (c - e I) q_m, so that c q_k = e q_k + q_{k-1}.
///
/// Throws NotDefectiveEnough when (c - e I) q_1 is not zero to relative
/// tolerance tol, or when the chain is rank deficient.
CMatrix jordan_chain_block(CMatrix const& c, Complex e, double tol = kChainTol);

/// ||(c - e I) q_1|| / (||c - e I|| ||q_1||) of the e_1-seeded chain, max
/// norms. Zero for an exact single Jordan block.
double chain_relative_residual(CMatrix const& c, Complex e);

/// Q and S of H^(n)(t_star) at a decoupling time. Throws NotEpTime when
/// t_star is not in ep_cascade(n).times.
JordanForm assemble_q(int n, long long t_star);

/// Fills condition and abs_det from q.
JordanForm make_jordan_form(std::vector<JordanBlock> blocks, CMatrix q, int chain_size);

/// max |H q - q S|.
double jordan_residual(CMatrix const& h, JordanForm const& jf);
/// jordan_residual divided by max |q|. Chain columns grow like scale^(2K),
/// so this is the comparable measure across dimensions.
double jordan_relative_residual(CMatrix const& h, JordanForm const& jf);

using SurdMatrix = std::vector<std::vector<Surd>>;

/// Exact chain of a model Hamiltonian whose whole matrix is one Jordan
/// block at 0 (e.g. build_hamiltonian(ep_params(n))). Entry [r][m] is
/// row r of q_{m+1}. Throws NotDefectiveEnough when the chain does not end
/// in the kernel, UnsupportedExact without exact couplings.
SurdMatrix exact_jordan_chain(Hamiltonian const& h);

CMatrix to_complex(SurdMatrix const& m);

} // namespace eplab
