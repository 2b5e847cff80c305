#include "eplab/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eplab/error.hpp"

namespace eplab {

void check_dimension(int n)
{
    if (n < 2 || n % 2 != 0)
        throw InvalidDimension("dimension must be even and >= 2, got " + std::to_string(n));
}

ZParams::ZParams(int n, std::vector<double> values, std::optional<std::vector<Rational>> exact)
    : n_(n), values_(std::move(values)), exact_(std::move(exact))
{
    check_dimension(n);
    if (values_.size() != static_cast<std::size_t>(n / 2))
        throw InvalidDimension("expected " + std::to_string(n / 2) + " couplings, got "
                               + std::to_string(values_.size()));
}

ZParams ZParams::exact(int n, std::vector<Rational> z)
{
    std::vector<double> values;
    values.reserve(z.size());
    for (auto const& v : z)
        values.push_back(v.convert_to<double>());
    return ZParams(n, std::move(values), std::move(z));
}

ZParams ZParams::integers(int n, std::vector<long long> const& z)
{
    std::vector<Rational> r(z.begin(), z.end());
    return exact(n, std::move(r));
}

ZParams ZParams::approximate(int n, std::vector<double> z)
{
    return ZParams(n, std::move(z), std::nullopt);
}

std::vector<Rational> const& ZParams::exact_values() const
{
    if (!exact_)
        throw UnsupportedExact("couplings carry no exact rational values");
    return *exact_;
}

bool ZParams::strictly_increasing() const
{
    if (exact_)
        return std::adjacent_find(exact_->begin(), exact_->end(),
                                  [](auto const& a, auto const& b) { return !(a < b); })
            == exact_->end();
    return std::adjacent_find(values_.begin(), values_.end(),
                              [](double a, double b) { return !(a < b); })
        == values_.end();
}

ZParams z_of_t(int n, double t)
{
    if (!std::isfinite(t))
        throw InvalidArgument("t must be finite");
    return z_of_t(n, Rational(t));
}

ZParams z_of_t(int n, Rational const& t)
{
    check_dimension(n);
    std::vector<Rational> z;
    z.reserve(static_cast<std::size_t>(n / 2));
    for (int j = 1; j <= n / 2; ++j)
        z.emplace_back(Rational(j * (n - j)) - t);
    return ZParams::exact(n, std::move(z));
}

Surd Hamiltonian::coupling_exact(int j) const
{
    auto const& z = z_.exact_values();
    Surd a = Surd::sqrt_of(z.at(static_cast<std::size_t>(j - 1)));
    return branch_[static_cast<std::size_t>(j - 1)] < 0 ? -a : a;
}

Surd Hamiltonian::sup_exact(int p) const
{
    return coupling_exact(coupling_index(n(), p));
}

CMatrix Hamiltonian::dense() const
{
    int const n = this->n();
    CMatrix h = CMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k)
        h(k, k) = diag_[static_cast<std::size_t>(k)];
    for (int p = 0; p + 1 < n; ++p) {
        h(p, p + 1) = sup_[static_cast<std::size_t>(p)];
        h(p + 1, p) = sub_[static_cast<std::size_t>(p)];
    }
    return h;
}

Hamiltonian build_hamiltonian(ZParams const& z)
{
    return build_hamiltonian(z, std::vector<int>(static_cast<std::size_t>(z.half()), 1));
}

Hamiltonian build_hamiltonian(ZParams const& z, std::vector<int> const& branch)
{
    if (branch.size() != static_cast<std::size_t>(z.half()))
        throw InvalidArgument("branch vector must have one sign per coupling");
    Hamiltonian h(z);
    int const n = z.n();
    h.branch_.reserve(branch.size());
    for (int s : branch) {
        if (s != 1 && s != -1)
            throw InvalidArgument("branch signs must be +1 or -1");
        h.branch_.push_back(s);
    }

    std::vector<Complex> a;
    a.reserve(branch.size());
    for (int j = 1; j <= z.half(); ++j) {
        double const zj = z(j);
        Complex aj = zj >= 0 ? Complex(std::sqrt(zj), 0.0) : Complex(0.0, std::sqrt(-zj));
        a.push_back(static_cast<double>(h.branch_[static_cast<std::size_t>(j - 1)]) * aj);
    }

    h.diag_.resize(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        h.diag_[static_cast<std::size_t>(k - 1)] = 2.0 * k - 1.0 - n;
    h.sup_.resize(static_cast<std::size_t>(n - 1));
    h.sub_.resize(static_cast<std::size_t>(n - 1));
    double scale = n - 1.0;
    for (int p = 1; p < n; ++p) {
        Complex const ap = a[static_cast<std::size_t>(coupling_index(n, p) - 1)];
        h.sup_[static_cast<std::size_t>(p - 1)] = ap;
        h.sub_[static_cast<std::size_t>(p - 1)] = -ap;
        scale = std::max(scale, std::abs(ap));
    }
    h.scale_ = scale;
    return h;
}

Partition partition(ZParams const& z)
{
    if (!z.strictly_increasing())
        throw UnsupportedPartition("couplings must be strictly increasing for the A|C|B partition");
    int const n = z.n();
    int m = 0;
    bool has_zero = false;
    if (z.has_exact()) {
        for (auto const& v : z.exact_values()) {
            m += v <= 0 ? 1 : 0;
            has_zero = has_zero || v == 0;
        }
    } else {
        for (double v : z.values()) {
            m += v <= 0.0 ? 1 : 0;
            has_zero = has_zero || v == 0.0;
        }
    }
    Partition p;
    p.m = m;
    p.k = n / 2 - m;
    p.a = {0, m};
    p.c = {m, 2 * p.k};
    p.b = {m + 2 * p.k, m};
    p.coupled = !has_zero;
    return p;
}

Blocks extract_blocks(Hamiltonian const& h, Partition const& p)
{
    if (p.coupled)
        throw BlocksNotDecoupled("Hermitian and non-Hermitian blocks are still coupled");
    CMatrix const d = h.dense();
    Blocks blocks;
    blocks.a = d.block(p.a.begin, p.a.begin, p.a.size, p.a.size);
    blocks.c = d.block(p.c.begin, p.c.begin, p.c.size, p.c.size);
    blocks.b = d.block(p.b.begin, p.b.begin, p.b.size, p.b.size);
    return blocks;
}

CMatrix direct_sum(Blocks const& blocks)
{
    auto const na = blocks.a.rows();
    auto const nc = blocks.c.rows();
    auto const nb = blocks.b.rows();
    CMatrix out = CMatrix::Zero(na + nc + nb, na + nc + nb);
    out.block(0, 0, na, na) = blocks.a;
    out.block(na, na, nc, nc) = blocks.c;
    out.block(na + nc, na + nc, nb, nb) = blocks.b;
    return out;
}

CMatrix parity(int n)
{
    CMatrix p = CMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k)
        p(k, n - 1 - k) = 1.0;
    return p;
}

} // namespace eplab
