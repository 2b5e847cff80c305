#include "eplab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "eplab/charpoly.hpp"
#include "eplab/emit.hpp"
#include "eplab/eplocus.hpp"
#include "eplab/error.hpp"
#include "eplab/jordan.hpp"
#include "eplab/perturb.hpp"
#include "eplab/spectra.hpp"
#include "eplab/sweep.hpp"

namespace eplab {

namespace {

using Clock = std::chrono::steady_clock;

std::string sci(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Spectrum classified(ZParams const& z)
{
    return classify(eigenvalues(build_hamiltonian(z)));
}

/// Largest |a_i - b_i| after sorting both by (re, im).
double sorted_distance(std::vector<Complex> a, std::vector<Complex> b)
{
    if (a.size() != b.size())
        return std::numeric_limits<double>::infinity();
    a = sorted_eigenvalues(std::move(a));
    b = sorted_eigenvalues(std::move(b));
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

int zero_cluster_multiplicity(Spectrum const& s)
{
    double const gap = kDefaultClusterTol * (1.0 + spectral_scale(s.values));
    for (Cluster const& c : s.clusters)
        if (std::abs(c.center) <= gap)
            return c.multiplicity;
    return 0;
}

CheckResult check_ep_identity(VerifyOptions const& opts)
{
    CheckResult r;
    auto const start = Clock::now();
    int failures = 0;
    int first_failure = 0;
    for (int n = 2; n <= 24; n += 2) {
        ZParams z = ep_params(n);
        if (opts.inject_z_perturbation) {
            std::vector<Rational> v = z.exact_values();
            v[0] += 1;
            z = ZParams::exact(n, v);
        }
        if (!verify_ep_identity(z).holds && failures++ == 0)
            first_failure = n;
    }
    double const elapsed = seconds_since(start);
    r.passed = failures == 0 && elapsed < 5.0;
    r.measured = std::to_string(failures) + " failing n, " + sci(elapsed) + " s";
    r.tolerance = "exact, < 5 s";
    r.detail = failures == 0 ? "det(H - E) = E^n for n = 2..24"
                             : "first failing n = " + std::to_string(first_failure);
    return r;
}

CheckResult check_secular_n8(VerifyOptions const& opts)
{
    CheckResult r;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<long long> dist(-100, 100);
    auto coeffs_of = [](long long a, long long b, long long c, long long d) {
        Polynomial<Rational> const q
            = even_reduce(char_poly_exact(build_hamiltonian(ZParams::integers(8, {d, c, b, a}))));
        return SecularCoeffsN8<Rational>{q[3], q[2], q[1], q[0]};
    };
    int mismatches = 0;
    for (int i = 0; i < 100; ++i) {
        long long const a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);
        auto const expected
            = secular_coeffs_n8<Rational>(Rational(a), Rational(b), Rational(c), Rational(d));
        if (!(coeffs_of(a, b, c, d) == expected))
            ++mismatches;
    }
    SecularCoeffsN8<Rational> const zero{0, 0, 0, 0};
    bool const ep_zero = secular_coeffs_n8<Rational>(16, 15, 12, 7) == zero
        && coeffs_of(16, 15, 12, 7) == zero;
    r.passed = mismatches == 0 && ep_zero;
    r.measured = std::to_string(mismatches) + "/100 mismatches, EP quadruple "
        + (ep_zero ? "zero" : "nonzero");
    r.tolerance = "exact";
    return r;
}

CheckResult check_finetuned_spectrum()
{
    CheckResult r;
    double worst = 0.0;
    for (double t : {0.25, 1.0, 4.0}) {
        Rational const tr(t);
        ZParams const z = ZParams::exact(4, {3 - 3 * tr, 4 - 4 * tr});
        double const s = std::sqrt(t);
        worst = std::max(worst, sorted_distance(eigenvalues(build_hamiltonian(z)).values,
                                                {-3 * s, -s, s, 3 * s}));
    }
    r.passed = worst <= 1e-10;
    r.measured = sci(worst);
    r.tolerance = "1e-10";
    r.detail = "t in {0.25, 1, 4} vs {+-sqrt(t), +-3 sqrt(t)}";
    return r;
}

CheckResult check_h8_t15()
{
    CheckResult r;
    Spectrum const s = classified(z_of_t(8, Rational(15)));
    std::vector<Complex> nonzero;
    for (Complex e : s.values)
        if (std::abs(e) > 1e-6)
            nonzero.push_back(e);
    std::vector<Complex> expected;
    for (double v : {9.171029786, 4.311583134, 1.517387080}) {
        expected.emplace_back(v);
        expected.emplace_back(-v);
    }
    double const d = sorted_distance(nonzero, expected);
    int const mult = zero_cluster_multiplicity(s);
    r.passed = d <= 1e-6 && mult == 2;
    r.measured = sci(d) + ", zero cluster x" + std::to_string(mult);
    r.tolerance = "1e-6, multiplicity 2";
    return r;
}

CheckResult check_h8_t12()
{
    CheckResult r;
    Spectrum const s = classified(z_of_t(8, Rational(12)));
    std::vector<Complex> outer;
    for (Complex e : s.values)
        if (std::abs(e) > 1e-6)
            outer.push_back(e);
    double const r6 = std::sqrt(6.0);
    double const d = sorted_distance(outer, {-6 - r6, -6 + r6, 6 - r6, 6 + r6});
    int const mult = zero_cluster_multiplicity(s);
    r.passed = d <= 1e-10 && mult == 4;
    r.measured = sci(d) + ", zero cluster x" + std::to_string(mult);
    r.tolerance = "1e-10, multiplicity 4";
    return r;
}

/// Q at n = 4, t = 0 in the integer * sqrt(3) form.
SurdMatrix expected_q4()
{
    auto s3 = [](long long c) { return Surd(Rational(c), Rational(3)); };
    auto q = [](long long c) { return Surd(Rational(c)); };
    return {{q(-6), q(6), q(-3), q(1)},
            {s3(-6), s3(4), s3(-1), q(0)},
            {s3(-6), s3(2), q(0), q(0)},
            {q(-6), q(0), q(0), q(0)}};
}

CheckResult check_q4_exact()
{
    CheckResult r;
    Hamiltonian const h = build_hamiltonian(ep_params(4));
    SurdMatrix const expected = expected_q4();
    bool const exact = exact_jordan_chain(h) == expected;
    double const float_dev
        = (jordan_chain_block(h.dense(), Complex(0.0)) - to_complex(expected)).cwiseAbs().maxCoeff();
    r.passed = exact && float_dev <= 1e-14;
    r.measured = std::string(exact ? "exact match" : "exact mismatch") + ", float " + sci(float_dev);
    r.tolerance = "exact; 1e-14 float";
    return r;
}

CheckResult check_finetuned_w()
{
    CheckResult r;
    JordanForm const jf = assemble_q(4, 0);
    double worst = 0.0;
    double zeros = 0.0;
    bool fine_tuned = true;
    for (double t : {0.01, 0.1}) {
        Rational const tr(t);
        Hamiltonian const h = build_hamiltonian(ZParams::exact(4, {3 - 3 * tr, 4 - 4 * tr}));
        PerturbationData const d = perturbation_matrix(h.dense(), jf);
        double const eta = std::sqrt(1.0 - t) - 1.0;
        CMatrix expected(4, 4);
        expected << -3, 1, 0, 0, -6, -1, 1, 0, 0, -8, 1, 1, 0, 0, -6, 3;
        expected *= eta;
        worst = std::max(worst, (d.w - expected).cwiseAbs().maxCoeff());
        zeros = std::max({zeros, std::abs(d.w(3, 0)), std::abs(d.w(2, 0)), std::abs(d.w(3, 1))});
        fine_tuned = fine_tuned && d.fine_tuned;
    }
    r.passed = worst <= 1e-12 && zeros <= 1e-12 && fine_tuned;
    r.measured = sci(worst) + ", zeros " + sci(zeros);
    r.tolerance = "1e-12";
    r.detail = fine_tuned ? "flagged fine-tuned" : "not flagged fine-tuned";
    return r;
}

CheckResult check_generic_w41()
{
    CheckResult r;
    JordanForm const jf = assemble_q(4, 0);
    int const points = 10;
    Eigen::MatrixXd a(points, 3);
    Eigen::VectorXd b(points);
    for (int i = 0; i < points; ++i) {
        double const t = 1e-3 * (i + 1);
        Rational const tr(t);
        Hamiltonian const h = build_hamiltonian(ZParams::exact(4, {3 - tr, 4 - tr}));
        a(i, 0) = 1.0;
        a(i, 1) = t;
        a(i, 2) = t * t;
        b(i) = perturbation_matrix(h.dense(), jf).w(3, 0).real();
    }
    Eigen::VectorXd const c = a.colPivHouseholderQr().solve(b);
    double const e1 = std::abs(c(1) - 3.0) / 3.0;
    double const e2 = std::abs(c(2) - 7.0 / 16.0) / (7.0 / 16.0);
    r.passed = e1 <= 0.01 && e2 <= 0.01;
    r.measured = "c1 = " + format_number(c(1)) + ", c2 = " + format_number(c(2));
    r.tolerance = "1% relative";
    r.detail = "relative errors " + sci(e1) + ", " + sci(e2);
    return r;
}

CheckResult check_unfolding(VerifyOptions const& opts)
{
    CheckResult r;
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto phase = [&] { return std::polar(1.0, 2.0 * std::numbers::pi * unit(rng)); };
    int const samples = 20;
    double worst_d = 0.0;
    double worst_ratio = 0.0;
    int failures = 0;
    for (int big_n : {4, 6, 8}) {
        for (int s = 0; s < samples; ++s) {
            CMatrix v(big_n, big_n);
            for (int i = 0; i < big_n; ++i)
                for (int j = 0; j < big_n; ++j)
                    v(i, j) = std::sqrt(unit(rng)) * phase();
            v(big_n - 1, 0) = phase();
            double d_first = 0.0;
            double d_last = 0.0;
            for (double lambda : {1e-2, 1e-4, 1e-6}) {
                CMatrix const w = lambda * v;
                std::vector<Complex> const eigs
                    = dense_eigenvalues(CMatrix(jordan_block(big_n, Complex(0.0)) + w));
                UnfoldingPrediction const p = unfold_ring(w(big_n - 1, 0), big_n);
                double const d = ring_deviation(eigs, p) / std::pow(lambda, 1.0 / big_n);
                if (lambda == 1e-2)
                    d_first = d;
                d_last = d;
            }
            worst_d = std::max(worst_d, d_last);
            worst_ratio = std::max(worst_ratio, d_last / d_first);
            if (!(d_last <= 0.05 && d_last <= d_first / 2))
                ++failures;
        }
    }
    r.passed = failures == 0;
    r.measured = "max d(1e-6) = " + sci(worst_d) + ", max d(1e-6)/d(1e-2) = " + sci(worst_ratio);
    r.tolerance = "d(1e-6) <= 0.05 and <= d(1e-2)/2";
    r.detail = std::to_string(failures) + " of " + std::to_string(3 * samples) + " samples failing";
    return r;
}

CheckResult check_ep_cascade()
{
    CheckResult r;
    EpCascade const c = ep_cascade(8);
    bool const times_ok = c.times == std::vector<long long>{0, 7, 12, 15, 16};
    bool const orders_ok = c.orders == std::vector<int>{8, 6, 4, 2, 0};
    bool inner_ok = true;
    bool spectra_ok = true;
    for (std::size_t i = 0; i < c.times.size(); ++i) {
        if (c.orders[i] > 0)
            inner_ok = inner_ok && inner_block_is_ep(8, c.times[i]);
        spectra_ok = spectra_ok
            && zero_cluster_multiplicity(classified(z_of_t(8, Rational(c.times[i])))) == c.orders[i];
    }
    bool recurrence_ok = true;
    for (long long n = 4; n <= 64; n += 2)
        for (long long j = 2; j <= n / 2; ++j)
            recurrence_ok = recurrence_ok && lemma4_check(j, n);
    r.passed = times_ok && orders_ok && inner_ok && spectra_ok && recurrence_ok;
    std::ostringstream m;
    m << "times " << (times_ok ? "ok" : "bad") << ", orders " << (orders_ok ? "ok" : "bad")
      << ", inner blocks " << (inner_ok ? "ok" : "bad") << ", zero clusters "
      << (spectra_ok ? "ok" : "bad") << ", recurrence " << (recurrence_ok ? "ok" : "bad");
    r.measured = m.str();
    r.tolerance = "exact";
    return r;
}

CheckResult check_reality_pattern()
{
    CheckResult r;
    auto n_real = [](int n, double t) {
        SweepRecord const rec = sweep_point(n, t, Method::PolyRoots, kDefaultRealTol, kDefaultClusterTol);
        return rec.n_real;
    };
    std::ostringstream m;
    bool ok = true;
    for (double t : {15.2, 15.5, 15.9, 16.5, 18.0}) {
        int const k = n_real(8, t);
        ok = ok && k == 8;
        m << "n8 t=" << t << ":" << k << ' ';
    }
    int const neg = n_real(4, -0.01);
    int const pos = n_real(4, 0.01);
    ok = ok && neg == 0 && pos == 2;
    m << "n4 t=-0.01:" << neg << " t=0.01:" << pos;
    r.passed = ok;
    r.measured = m.str();
    r.tolerance = "classification defaults";
    return r;
}

CheckResult check_determinism(Clock::time_point suite_start)
{
    CheckResult r;
    auto render = [](int jobs) {
        SweepOptions opts;
        opts.jobs = jobs;
        std::ostringstream os;
        write_csv(os, sweep(opts), opts.n);
        return os.str();
    };
    std::string const first = render(1);
    bool const same_again = render(1) == first;
    bool const same_parallel = render(4) == first;
    double const total = seconds_since(suite_start);
    r.passed = same_again && same_parallel && total < 60.0;
    r.measured = std::string(same_again ? "repeat identical" : "repeat differs") + ", "
        + (same_parallel ? "4 jobs identical" : "4 jobs differ") + ", suite " + sci(total) + " s";
    r.tolerance = "byte-identical, < 60 s";
    r.detail = std::to_string(first.size()) + " bytes of CSV";
    return r;
}

} // namespace

bool VerifyReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](CheckResult const& c) { return c.passed; });
}

std::vector<std::string_view> verify_check_names()
{
    return {"lemma2",           "secular-n8",  "finetuned-spectrum", "h8-t15",
            "h8-t12",           "q4-exact",    "finetuned-w",        "generic-w41",
            "lemma3-unfolding", "ep-cascade",  "reality-pattern",    "determinism"};
}

VerifyReport verify_suite(VerifyOptions const& opts)
{
    auto const names = verify_check_names();
    for (auto const& o : opts.only)
        if (std::find(names.begin(), names.end(), o) == names.end())
            throw InvalidArgument("unknown check '" + o + "'");

    auto const start = Clock::now();
    std::vector<std::function<CheckResult()>> const checks = {
        [&] { return check_ep_identity(opts); },
        [&] { return check_secular_n8(opts); },
        [] { return check_finetuned_spectrum(); },
        [] { return check_h8_t15(); },
        [] { return check_h8_t12(); },
        [] { return check_q4_exact(); },
        [] { return check_finetuned_w(); },
        [] { return check_generic_w41(); },
        [&] { return check_unfolding(opts); },
        [] { return check_ep_cascade(); },
        [] { return check_reality_pattern(); },
        [&] { return check_determinism(start); },
    };

    VerifyReport report;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        std::string const name(names[i]);
        if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), name) == opts.only.end())
            continue;
        auto const t0 = Clock::now();
        CheckResult c;
        try {
            c = checks[i]();
        } catch (std::exception const& e) {
            c.passed = false;
            c.measured = "error";
            c.detail = e.what();
        }
        c.id = static_cast<int>(i + 1);
        c.name = name;
        c.seconds = seconds_since(t0);
        report.checks.push_back(std::move(c));
    }
    report.seconds = seconds_since(start);
    return report;
}

void write_report_text(std::ostream& os, VerifyReport const& report)
{
    for (auto const& c : report.checks) {
        char head[64];
        std::snprintf(head, sizeof head, "%s %2d %-18s", c.passed ? "PASS" : "FAIL", c.id, c.name.c_str());
        os << head << " measured: " << c.measured << " | tolerance: " << c.tolerance;
        if (!c.detail.empty())
            os << " | " << c.detail;
        os << '\n';
    }
}

void write_report_json(std::ostream& os, VerifyReport const& report)
{
    os << "{\"passed\": " << (report.all_passed() ? "true" : "false")
       << ", \"seconds\": " << format_number(report.seconds) << ", \"checks\": [";
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        auto const& c = report.checks[i];
        os << (i == 0 ? "\n" : ",\n") << "  {\"id\": " << c.id << ", \"name\": " << json_quote(c.name)
           << ", \"passed\": " << (c.passed ? "true" : "false")
           << ", \"measured\": " << json_quote(c.measured)
           << ", \"tolerance\": " << json_quote(c.tolerance)
           << ", \"detail\": " << json_quote(c.detail)
           << ", \"seconds\": " << format_number(c.seconds) << '}';
    }
    os << "\n]}\n";
}

} // namespace eplab
