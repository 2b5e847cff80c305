#include "eplab/jordan.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "eplab/eplocus.hpp"
#include "eplab/error.hpp"

namespace eplab {

namespace {

double max_abs(CMatrix const& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs(CVector const& v)
{
    return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

CMatrix raw_chain(CMatrix const& shifted)
{
    auto const n = shifted.rows();
    CMatrix q = CMatrix::Zero(n, n);
    q(0, n - 1) = 1.0;
    for (auto m = n - 1; m > 0; --m)
        q.col(m - 1) = shifted * q.col(m);
    return q;
}

CMatrix shifted_matrix(CMatrix const& c, Complex e)
{
    if (c.rows() != c.cols() || c.rows() == 0)
        throw InvalidDimension("Jordan chain needs a nonempty square block");
    return c - e * CMatrix::Identity(c.rows(), c.cols());
}

double relative_residual(CMatrix const& shifted, CMatrix const& q)
{
    CVector const r = shifted * q.col(0);
    double const denom = max_abs(shifted) * max_abs(CVector(q.col(0)));
    if (denom == 0.0)
        return max_abs(r) == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return max_abs(r) / denom;
}

// Chain entries are graded by many orders of magnitude; scale rows and then
// columns to unit max before the rank decision.
Eigen::Index equilibrated_rank(CMatrix m)
{
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        double const s = m.row(r).cwiseAbs().maxCoeff();
        if (s > 0.0)
            m.row(r) /= s;
    }
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        double const s = m.col(c).cwiseAbs().maxCoeff();
        if (s > 0.0)
            m.col(c) /= s;
    }
    return Eigen::FullPivLU<CMatrix>(m).rank();
}

} // namespace

CMatrix JordanForm::s() const
{
    int n = 0;
    for (auto const& b : blocks)
        n += b.size;
    CMatrix out = CMatrix::Zero(n, n);
    int at = 0;
    for (auto const& b : blocks) {
        out.block(at, at, b.size, b.size) = jordan_block(b.size, b.eigenvalue);
        at += b.size;
    }
    return out;
}

CMatrix jordan_block(int size, Complex e)
{
    CMatrix j = e * CMatrix::Identity(size, size);
    for (int i = 0; i + 1 < size; ++i)
        j(i, i + 1) = 1.0;
    return j;
}

double chain_relative_residual(CMatrix const& c, Complex e)
{
    CMatrix const shifted = shifted_matrix(c, e);
    return relative_residual(shifted, raw_chain(shifted));
}

CMatrix jordan_chain_block(CMatrix const& c, Complex e, double tol)
{
    CMatrix const shifted = shifted_matrix(c, e);
    CMatrix q = raw_chain(shifted);
    double const residual = relative_residual(shifted, q);
    if (!(residual <= tol))
        throw NotDefectiveEnough("chain seeded at e_1 does not end in the kernel (relative residual "
                                     + std::to_string(residual) + ")",
                                 residual);
    if (equilibrated_rank(q) < q.rows())
        throw NotDefectiveEnough("chain vectors are linearly dependent", residual);
    return q;
}

JordanForm make_jordan_form(std::vector<JordanBlock> blocks, CMatrix q, int chain_size)
{
    JordanForm jf;
    jf.blocks = std::move(blocks);
    jf.q = std::move(q);
    jf.chain_size = chain_size;
    if (jf.q.size() > 0) {
        Eigen::JacobiSVD<CMatrix> svd(jf.q);
        auto const& sv = svd.singularValues();
        double const smin = sv(sv.size() - 1);
        jf.condition = smin > 0.0 ? sv(0) / smin : std::numeric_limits<double>::infinity();
        jf.abs_det = std::abs(jf.q.partialPivLu().determinant());
    }
    return jf;
}

JordanForm assemble_q(int n, long long t_star)
{
    EpCascade const cascade = ep_cascade(n);
    if (std::find(cascade.times.begin(), cascade.times.end(), t_star) == cascade.times.end())
        throw NotEpTime("t = " + std::to_string(t_star) + " is not a decoupling time of n = "
                        + std::to_string(n));

    ZParams const z = z_of_t(n, Rational(t_star));
    Hamiltonian const h = build_hamiltonian(z);
    Partition const p = partition(z);

    CMatrix c;
    CMatrix a;
    CMatrix b;
    if (p.m == 0) {
        c = h.dense();
    } else {
        Blocks blocks = extract_blocks(h, p);
        c = std::move(blocks.c);
        a = std::move(blocks.a);
        b = std::move(blocks.b);
    }

    CMatrix q = CMatrix::Zero(n, n);
    std::vector<JordanBlock> jb;
    int col = 0;
    if (p.k > 0) {
        q.block(p.c.begin, 0, p.c.size, p.c.size) = jordan_chain_block(c, Complex(0.0));
        jb.push_back({p.c.size, Complex(0.0)});
        col = p.c.size;
    }

    auto add_hermitian = [&](CMatrix const& block, IndexRange range) {
        if (range.size == 0)
            return;
        Eigen::SelfAdjointEigenSolver<CMatrix> solver(block);
        if (solver.info() != Eigen::Success)
            throw ConvergenceError("Hermitian block eigensolve failed", {});
        for (int i = 0; i < range.size; ++i) {
            q.block(range.begin, col, range.size, 1) = solver.eigenvectors().col(i);
            jb.push_back({1, Complex(solver.eigenvalues()(i), 0.0)});
            ++col;
        }
    };
    add_hermitian(a, p.a);
    add_hermitian(b, p.b);

    return make_jordan_form(std::move(jb), std::move(q), p.k > 0 ? p.c.size : 0);
}

double jordan_residual(CMatrix const& h, JordanForm const& jf)
{
    if (h.rows() != jf.q.rows() || h.cols() != jf.q.cols())
        throw InvalidDimension("jordan_residual: dimension mismatch");
    return max_abs(CMatrix(h * jf.q - jf.q * jf.s()));
}

double jordan_relative_residual(CMatrix const& h, JordanForm const& jf)
{
    double const qmax = max_abs(jf.q);
    return qmax == 0.0 ? 0.0 : jordan_residual(h, jf) / qmax;
}

SurdMatrix exact_jordan_chain(Hamiltonian const& h)
{
    int const n = h.n();
    // T = D^-1 H D with D = diag(pi_r), pi_1 = 1, pi_{r+1} = pi_r * sub_r, is
    // rational: diag d_r, superdiagonal sup_r * sub_r, subdiagonal 1.
    std::vector<Surd> pi;
    pi.reserve(static_cast<std::size_t>(n));
    pi.emplace_back(Rational(1));
    std::vector<Rational> upper;
    for (int p = 1; p < n; ++p) {
        Surd const sub = h.sub_exact(p);
        if (sub.is_zero())
            throw NotDefectiveEnough("zero coupling splits the block; no single chain", 1.0);
        Surd const prod = h.sup_exact(p) * sub;
        if (!prod.is_rational())
            throw UnsupportedExact("off-diagonal product is not rational");
        upper.push_back(prod.coeff());
        pi.push_back(pi.back() * sub);
    }
    auto apply_t = [&](std::vector<Rational> const& v) {
        std::vector<Rational> out(v.size());
        for (std::size_t r = 0; r < v.size(); ++r) {
            out[r] = Rational(h.diag()[r]) * v[r];
            if (r + 1 < v.size())
                out[r] += upper[r] * v[r + 1];
            if (r > 0)
                out[r] += v[r - 1];
        }
        return out;
    };

    std::vector<std::vector<Rational>> chain(static_cast<std::size_t>(n));
    std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
    v[0] = 1;
    chain[static_cast<std::size_t>(n - 1)] = v;
    for (int m = n - 1; m > 0; --m) {
        v = apply_t(v);
        chain[static_cast<std::size_t>(m - 1)] = v;
    }
    std::vector<Rational> const kernel = apply_t(chain[0]);
    if (std::any_of(kernel.begin(), kernel.end(), [](Rational const& x) { return x != 0; }))
        throw NotDefectiveEnough("exact chain does not end in the kernel", 1.0);

    SurdMatrix q(static_cast<std::size_t>(n), std::vector<Surd>(static_cast<std::size_t>(n)));
    for (std::size_t r = 0; r < q.size(); ++r)
        for (std::size_t m = 0; m < q.size(); ++m)
            q[r][m] = pi[r] * chain[m][r];
    return q;
}

CMatrix to_complex(SurdMatrix const& m)
{
    auto const rows = static_cast<Eigen::Index>(m.size());
    auto const cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(m.front().size());
    CMatrix out(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c)
            out(r, c) = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].to_complex();
    return out;
}

} // namespace eplab
