#include "eplab/perturb.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "eplab/error.hpp"

namespace eplab {

namespace {

double max_abs(CMatrix const& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Reciprocal 1-norm condition estimate of q after row and column scaling.
double equilibrated_rcond(CMatrix q)
{
    for (Eigen::Index r = 0; r < q.rows(); ++r) {
        double const s = q.row(r).cwiseAbs().maxCoeff();
        if (s > 0.0)
            q.row(r) /= s;
    }
    for (Eigen::Index c = 0; c < q.cols(); ++c) {
        double const s = q.col(c).cwiseAbs().maxCoeff();
        if (s > 0.0)
            q.col(c) /= s;
    }
    Eigen::FullPivLU<CMatrix> const lu(q);
    return lu.isInvertible() ? lu.rcond() : 0.0;
}

} // namespace

PerturbationData perturbation_matrix(CMatrix const& h, JordanForm const& jf, double ft_tol)
{
    if (h.rows() != h.cols() || h.rows() != jf.q.rows())
        throw InvalidDimension("perturbation_matrix: h must be square and match q");
    if (jf.chain_size < 1)
        throw InvalidArgument("perturbation_matrix: Jordan form has no chain block");

    double const rcond = equilibrated_rcond(jf.q);
    if (!(rcond >= kMinRcond))
        throw ConditioningError("transition matrix is numerically singular", rcond);

    PerturbationData d;
    d.w = jf.q.fullPivLu().solve(CMatrix(h * jf.q)) - jf.s();
    d.ep_order = jf.chain_size;
    d.first_column = d.w.block(0, 0, d.ep_order, 1);
    d.fine_tuned = std::abs(d.w_n1()) <= ft_tol * max_abs(d.w);
    return d;
}

CMatrix build_Z(CMatrix const& w)
{
    if (w.rows() != w.cols())
        throw InvalidDimension("build_Z: w must be square");
    auto const n = w.rows();
    CMatrix z = CMatrix::Zero(n, n);
    if (n > 1)
        z.leftCols(n - 1) = w.rightCols(n - 1);
    return z;
}

ResolventSolution resolvent_solve(CMatrix const& w, Complex eps, std::optional<int> order)
{
    if (w.rows() != w.cols() || w.rows() == 0)
        throw InvalidDimension("resolvent_solve: w must be square and nonempty");
    int const n = static_cast<int>(w.rows());
    CVector r = -w.col(0);
    r(0) += eps;

    CMatrix const z = build_Z(w);
    ResolventSolution s;
    if (!order) {
        CMatrix const a = build_L(eps, n) + z;
        Eigen::FullPivLU<CMatrix> lu(a);
        if (!lu.isInvertible())
            throw SingularSystem("L(eps) + Z is singular");
        s.y = lu.solve(r);
    } else {
        if (*order < 0)
            throw InvalidArgument("resolvent_solve: order must be >= 0");
        CMatrix const rm = build_R(eps, n);
        CVector term = rm * r;
        s.y = term;
        for (int k = 1; k <= *order; ++k) {
            term = -(rm * (z * term));
            s.y += term;
        }
    }
    s.residual = s.y(n - 1);
    return s;
}

Polynomial<Complex> secular_leading(CMatrix const& w)
{
    if (w.rows() != w.cols() || w.rows() == 0)
        throw InvalidDimension("secular_leading: w must be square and nonempty");
    auto const n = w.rows();
    Polynomial<Complex> p;
    p.variable = Variable::Epsilon;
    p.coeffs.resize(static_cast<std::size_t>(n + 1));
    for (Eigen::Index i = 0; i < n; ++i)
        p.coeffs[static_cast<std::size_t>(i)] = -w(n - 1 - i, 0);
    p.coeffs.back() = 1.0;
    return p;
}

UnfoldingPrediction unfold_ring(Complex w_n1, int big_n, double real_tol)
{
    if (big_n < 2)
        throw InvalidArgument("unfold_ring: N must be >= 2");
    UnfoldingPrediction p;
    double arg = std::arg(w_n1);
    if (arg < 0.0)
        arg += 2.0 * std::numbers::pi;
    p.radius = std::pow(std::abs(w_n1), 1.0 / big_n);
    Complex const root = std::polar(p.radius, arg / big_n);
    for (int k = 1; k <= big_n; ++k) {
        Complex const member = root * std::polar(1.0, 2.0 * std::numbers::pi * k / big_n);
        p.ring.push_back(member);
        p.real_on_ring += std::abs(member.imag()) <= real_tol * p.radius ? 1 : 0;
    }
    return p;
}

UnfoldingOutcome predict_unfolding(PerturbationData const& data)
{
    UnfoldingOutcome out;
    if (data.fine_tuned) {
        out.status = UnfoldingStatus::FineTuned;
        return out;
    }
    out.prediction = unfold_ring(data.w_n1(), data.ep_order);
    return out;
}

double ring_deviation(std::span<Complex const> eigenvalues, UnfoldingPrediction const& p)
{
    double worst = 0.0;
    for (Complex e : eigenvalues) {
        double best = std::numeric_limits<double>::infinity();
        for (Complex r : p.ring)
            best = std::min(best, std::abs(e - r));
        worst = std::max(worst, best);
    }
    return worst;
}

} // namespace eplab
