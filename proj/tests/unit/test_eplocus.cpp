#include <doctest.h>

#include "eplab/eplocus.hpp"
#include "eplab/error.hpp"
#include "eplab/jordan.hpp"
#include "eplab/spectra.hpp"

using namespace eplab;

namespace {

std::vector<Rational> rationals(std::initializer_list<long long> v)
{
    return {v.begin(), v.end()};
}

int zero_cluster(int n, long long t)
{
    Spectrum const s = classify(eigenvalues(build_hamiltonian(z_of_t(n, Rational(t)))));
    for (auto const& c : s.clusters)
        if (std::abs(c.center) <= kDefaultClusterTol * (1.0 + spectral_scale(s.values)))
            return c.multiplicity;
    return 0;
}

} // namespace

TEST_CASE("EP couplings")
{
    CHECK(ep_params(8).exact_values() == rationals({7, 12, 15, 16}));
    CHECK(ep_params(4).exact_values() == rationals({3, 4}));
    CHECK(ep_params(2).exact_values() == rationals({1}));
    CHECK_THROWS_AS(ep_params(5), InvalidDimension);
}

TEST_CASE("EP identity holds exactly up to n = 24")
{
    CHECK(verify_ep_identity(2).holds);
    CHECK(verify_ep_identity(8).holds);
    auto const r24 = verify_ep_identity(24);
    CHECK(r24.holds);
    REQUIRE(r24.coeffs.size() == 25);
    CHECK(r24.coeffs.back() == 1);
    for (int n = 2; n <= 24; n += 2)
        CHECK(verify_ep_identity(n).holds);
    CHECK(verify_ep_identity(64).holds);
}

TEST_CASE("EP identity cap")
{
    CHECK_THROWS_AS(verify_ep_identity(66), CapExceeded);
    CHECK_THROWS_AS(verify_ep_identity(10, 8), CapExceeded);
    CHECK(verify_ep_identity(66, 66).holds);
}

TEST_CASE("shifting any single EP coupling by one breaks the identity")
{
    for (int n = 2; n <= 16; n += 2) {
        for (int k = 0; k < n / 2; ++k) {
            for (int shift : {-1, 1}) {
                std::vector<Rational> z = ep_params(n).exact_values();
                z[static_cast<std::size_t>(k)] += shift;
                CHECK_FALSE(verify_ep_identity(ZParams::exact(n, z)).holds);
            }
        }
    }
}

TEST_CASE("cascade examples")
{
    EpCascade const c8 = ep_cascade(8);
    CHECK(c8.times == std::vector<long long>{0, 7, 12, 15, 16});
    CHECK(c8.orders == std::vector<int>{8, 6, 4, 2, 0});
    EpCascade const c4 = ep_cascade(4);
    CHECK(c4.times == std::vector<long long>{0, 3, 4});
    CHECK(c4.orders == std::vector<int>{4, 2, 0});
    EpCascade const c2 = ep_cascade(2);
    CHECK(c2.times == std::vector<long long>{0, 1});
    CHECK(c2.orders == std::vector<int>{2, 0});
    CHECK_THROWS_AS(ep_cascade(3), InvalidDimension);
}

TEST_CASE("cascade structure")
{
    for (int n = 2; n <= 64; n += 2) {
        EpCascade const c = ep_cascade(n);
        CHECK(c.orders.front() == n);
        CHECK(c.orders.back() == 0);
        CHECK(c.times.back() == static_cast<long long>(n / 2) * (n / 2));
        for (std::size_t i = 1; i < c.times.size(); ++i) {
            CHECK(c.times[i - 1] < c.times[i]);
            ZParams const z = z_of_t(n, Rational(c.times[i]));
            Partition const p = partition(z);
            CHECK_FALSE(p.coupled);
            CHECK(2 * p.k == c.orders[i]);
        }
    }
}

TEST_CASE("cascade recurrence")
{
    CHECK(lemma4_check(2, 8));
    CHECK(lemma4_check(4, 8));
    CHECK(lemma4_check(2, 4));
    for (long long n = 4; n <= 64; n += 2)
        for (long long j = 2; j <= n / 2; ++j)
            CHECK(lemma4_check(j, n));
    CHECK_THROWS_AS(lemma4_check(1, 8), InvalidArgument);
    CHECK_THROWS_AS(lemma4_check(5, 8), InvalidArgument);
    CHECK_THROWS_AS(lemma4_check(2, 7), InvalidArgument);
    CHECK_THROWS_AS(lemma4_check(2, 2), InvalidArgument);
}

TEST_CASE("inner blocks are smaller EPs")
{
    CHECK(inner_block_is_ep(8, 7));
    CHECK(inner_block_is_ep(8, 12));
    CHECK(inner_block_is_ep(8, 15));
    CHECK(inner_block_is_ep(8, 0));
    CHECK_THROWS_AS(inner_block_is_ep(8, 16), NotEpTime);
    CHECK_THROWS_AS(inner_block_is_ep(8, 8), NotEpTime);
    for (int n = 2; n <= 40; n += 2) {
        EpCascade const c = ep_cascade(n);
        for (std::size_t i = 0; i + 1 < c.times.size(); ++i)
            CHECK(inner_block_is_ep(n, c.times[i]));
    }
}

TEST_CASE("each cascade time shows a 2K-fold zero cluster and a full Jordan chain")
{
    for (int n = 2; n <= 16; n += 2) {
        EpCascade const c = ep_cascade(n);
        for (std::size_t i = 0; i < c.times.size(); ++i) {
            int const order = c.orders[i];
            CHECK(zero_cluster(n, c.times[i]) == order);
            if (order == 0)
                continue;
            int const m = (n - order) / 2;
            CMatrix const block
                = build_hamiltonian(z_of_t(n, Rational(c.times[i]))).dense().block(m, m, order, order);
            CHECK_NOTHROW(jordan_chain_block(block, Complex(0.0)));
        }
    }
}

TEST_CASE("near-EP screening")
{
    NearEpReport const at = near_ep_check(8, 7.0);
    CHECK(at.expected_order == 6);
    CHECK(at.cluster_multiplicity == 6);
    CHECK(at.chain_residual <= 1e-12);
    CHECK(at.is_near_ep);

    NearEpReport const zero = near_ep_check(8, 0.0);
    CHECK(zero.is_near_ep);
    CHECK(zero.cluster_multiplicity == 8);

    NearEpReport const off = near_ep_check(8, 9.0);
    CHECK(off.expected_order == 6);
    CHECK_FALSE(off.is_near_ep);
}
