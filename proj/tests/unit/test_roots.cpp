#include <doctest.h>

#include "eplab/error.hpp"
#include "eplab/roots.hpp"
#include "helpers.hpp"

using namespace eplab;

namespace {

/// Coefficients of prod (x - r), constant term first.
Polynomial<Complex> from_roots(std::vector<Complex> const& roots)
{
    std::vector<Complex> c{1.0};
    for (Complex r : roots) {
        std::vector<Complex> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return {c, Variable::S};
}

} // namespace

TEST_CASE("simple real and complex roots")
{
    std::vector<Complex> const r{1.0, -2.0, 3.5, Complex(0.5, 2.0), Complex(0.5, -2.0)};
    CHECK(testing::sorted_distance(polynomial_roots(from_roots(r)), r) < 1e-12);

    Polynomial<double> const quad{{2.0, -3.0, 1.0}, Variable::S};
    CHECK(testing::sorted_distance(polynomial_roots(quad), {1.0, 2.0}) < 1e-14);

    Polynomial<double> const imag{{4.0, 0.0, 1.0}, Variable::S};
    CHECK(testing::sorted_distance(polynomial_roots(imag), {Complex(0, 2), Complex(0, -2)}) < 1e-14);
}

TEST_CASE("trailing zero coefficients are exact zero roots")
{
    Polynomial<double> const p{{0.0, 0.0, 0.0, -1.0, 1.0}, Variable::S};
    auto const roots = polynomial_roots(p);
    REQUIRE(roots.size() == 4);
    int exact_zeros = 0;
    for (Complex r : roots)
        exact_zeros += r == Complex(0.0) ? 1 : 0;
    CHECK(exact_zeros == 3);
    CHECK(testing::sorted_distance(roots, {0.0, 0.0, 0.0, 1.0}) < 1e-15);
}

TEST_CASE("multiple roots converge to their attainable accuracy")
{
    std::vector<Complex> const r{2.0, 2.0, 2.0, 2.0, -1.0};
    auto const roots = polynomial_roots(from_roots(r));
    REQUIRE(roots.size() == 5);
    // A fourfold root is determined to about eps^(1/4).
    CHECK(testing::sorted_distance(roots, r) < 1e-3);
}

TEST_CASE("degenerate inputs")
{
    CHECK(polynomial_roots(Polynomial<double>{{5.0}, Variable::S}).empty());
    CHECK_THROWS_AS(polynomial_roots(Polynomial<double>{{0.0, 0.0}, Variable::S}), InvalidArgument);
    auto const lin = polynomial_roots(Polynomial<double>{{3.0, 2.0}, Variable::S});
    REQUIRE(lin.size() == 1);
    CHECK(lin[0] == Complex(-1.5));
    // Leading zeros are dropped.
    CHECK(polynomial_roots(Polynomial<double>{{-1.0, 1.0, 0.0}, Variable::S}).size() == 1);
}

TEST_CASE("iteration cap reports partial roots")
{
    std::vector<Complex> r;
    for (int k = 1; k <= 12; ++k)
        r.emplace_back(k);
    RootFinderOptions opts;
    opts.max_iterations = 1;
    try {
        polynomial_roots(from_roots(r), opts);
        FAIL("expected a convergence error");
    } catch (ConvergenceError const& e) {
        CHECK(e.partial().size() == 12);
    }
    // Wilkinson-type conditioning limits the attainable accuracy.
    CHECK(testing::sorted_distance(polynomial_roots(from_roots(r)), r) < 1e-5);
}

TEST_CASE("root order is deterministic")
{
    std::vector<Complex> const r{Complex(1, 1), Complex(-3, 0.5), 7.0, -0.25};
    auto const a = polynomial_roots(from_roots(r));
    auto const b = polynomial_roots(from_roots(r));
    CHECK(a == b);
}
