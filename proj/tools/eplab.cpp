#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "eplab/emit.hpp"
#include "eplab/eplocus.hpp"
#include "eplab/error.hpp"
#include "eplab/jordan.hpp"
#include "eplab/perturb.hpp"
#include "eplab/spectra.hpp"
#include "eplab/sweep.hpp"
#include "eplab/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

using eplab::Complex;
using eplab::format_number;

std::string complex_text(Complex z)
{
    return format_number(z.real()) + (std::signbit(z.imag()) ? " - " : " + ")
        + format_number(std::abs(z.imag())) + "i";
}

void print_matrix(std::ostream& os, eplab::CMatrix const& m)
{
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            os << (c == 0 ? "  " : "  ,  ") << complex_text(m(r, c));
        os << '\n';
    }
}

/// Sends output to --out when given, stdout otherwise.
template <typename F>
void with_output(std::string const& path, F&& write)
{
    if (path.empty()) {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw eplab::IoError("cannot open '" + path + "' for writing");
    write(out);
    out.flush();
    if (!out)
        throw eplab::IoError("write to '" + path + "' failed");
}

struct SweepArgs
{
    eplab::SweepOptions opts;
    std::string method = "poly";
    std::string format = "csv";
    std::string out;
};

int run_sweep(SweepArgs args)
{
    args.opts.method = eplab::parse_method(args.method);
    eplab::Format const format = eplab::parse_format(args.format);
    if (format == eplab::Format::Gnuplot && args.out.empty())
        throw eplab::InvalidArgument("--format gnuplot needs --out PATH");

    auto const records = eplab::sweep(args.opts);
    if (args.out.empty()) {
        if (format == eplab::Format::Json)
            eplab::write_json(std::cout, records);
        else
            eplab::write_csv(std::cout, records, args.opts.n);
        std::cout.flush();
    } else {
        eplab::emit(records, args.opts.n, format, args.out, args.opts.real_tol);
    }

    int failed = 0;
    for (auto const& r : records)
        if (r.error) {
            if (failed++ == 0)
                std::cerr << "eplab: solver failed at t = " << format_number(r.t) << ": " << *r.error << '\n';
        }
    if (failed > 0) {
        std::cerr << "eplab: " << failed << " of " << records.size() << " points failed\n";
        return kExitNumerical;
    }
    return kExitOk;
}

int run_ep(int n, std::optional<double> t, std::string const& format, std::string const& out)
{
    eplab::EpCascade const c = eplab::ep_cascade(n);
    eplab::EpIdentityReport const id = eplab::verify_ep_identity(n);
    std::optional<eplab::NearEpReport> near;
    if (t)
        near = eplab::near_ep_check(n, *t);

    auto inner = [&](std::size_t i) {
        return c.orders[i] > 0 ? (eplab::inner_block_is_ep(n, c.times[i]) ? "yes" : "no") : "-";
    };

    if (format == "json") {
        with_output(out, [&](std::ostream& os) {
            os << "{\"n\": " << n << ", \"ep_identity\": " << (id.holds ? "true" : "false")
               << ", \"cascade\": [";
            for (std::size_t i = 0; i < c.times.size(); ++i) {
                auto const p = eplab::partition(eplab::z_of_t(n, eplab::Rational(c.times[i])));
                os << (i == 0 ? "" : ", ") << "{\"t\": " << c.times[i] << ", \"order\": " << c.orders[i]
                   << ", \"m\": " << p.m << ", \"k\": " << p.k << ", \"inner_block_ep\": "
                   << (c.orders[i] > 0 ? (std::string(inner(i)) == "yes" ? "true" : "false") : "null")
                   << '}';
            }
            os << ']';
            if (near)
                os << ", \"near\": {\"t\": " << format_number(*t)
                   << ", \"cluster_multiplicity\": " << near->cluster_multiplicity
                   << ", \"expected_order\": " << near->expected_order
                   << ", \"chain_residual\": " << format_number(near->chain_residual)
                   << ", \"is_near_ep\": " << (near->is_near_ep ? "true" : "false") << '}';
            os << "}\n";
        });
        return kExitOk;
    }
    if (format != "text")
        throw eplab::InvalidArgument("ep: --format must be text or json");

    with_output(out, [&](std::ostream& os) {
        os << "n = " << n << ", det(H - E) = E^n at z_k = k(n - k): " << (id.holds ? "yes" : "no") << '\n';
        os << "t\torder\tm\tk\tinner block EP\n";
        for (std::size_t i = 0; i < c.times.size(); ++i) {
            auto const p = eplab::partition(eplab::z_of_t(n, eplab::Rational(c.times[i])));
            os << c.times[i] << '\t' << c.orders[i] << '\t' << p.m << '\t' << p.k << '\t' << inner(i) << '\n';
        }
        if (near)
            os << "at t = " << format_number(*t) << ": zero cluster x" << near->cluster_multiplicity
               << ", expected order " << near->expected_order << ", chain residual "
               << format_number(near->chain_residual) << ", near EP: " << (near->is_near_ep ? "yes" : "no")
               << '\n';
    });
    return kExitOk;
}

int run_jordan(int n, long long t_star, std::string const& out)
{
    eplab::JordanForm const jf = eplab::assemble_q(n, t_star);
    eplab::Hamiltonian const h = eplab::build_hamiltonian(eplab::z_of_t(n, eplab::Rational(t_star)));
    eplab::Partition const p = eplab::partition(h.z());

    with_output(out, [&](std::ostream& os) {
        os << "n = " << n << ", t = " << t_star << ", Jordan block size " << jf.chain_size
           << ", m = " << p.m << ", k = " << p.k << '\n';
        os << "cond(Q) = " << format_number(jf.condition) << ", |det Q| = " << format_number(jf.abs_det)
           << ", max|HQ - QS| / max|Q| = " << format_number(eplab::jordan_relative_residual(h.dense(), jf))
           << '\n';
        os << "Q:\n";
        print_matrix(os, jf.q);
        os << "S:\n";
        print_matrix(os, jf.s());
        if (jf.chain_size > 0) {
            eplab::Hamiltonian const inner = eplab::build_hamiltonian(eplab::ep_params(jf.chain_size));
            eplab::SurdMatrix const exact = eplab::exact_jordan_chain(inner);
            os << "exact chain (rows " << p.c.begin + 1 << ".." << p.c.end() << " of Q):\n";
            for (auto const& row : exact) {
                for (std::size_t c = 0; c < row.size(); ++c)
                    os << (c == 0 ? "  " : "  ,  ") << row[c];
                os << '\n';
            }
        }
    });
    return kExitOk;
}

int run_unfold(int n, double t, long long t_star, std::string const& out)
{
    eplab::JordanForm const jf = eplab::assemble_q(n, t_star);
    if (jf.chain_size < 2)
        throw eplab::InvalidArgument("unfold: no exceptional point at t = " + std::to_string(t_star));
    eplab::Hamiltonian const h = eplab::build_hamiltonian(eplab::z_of_t(n, t));
    eplab::PerturbationData const d = eplab::perturbation_matrix(h.dense(), jf);
    eplab::UnfoldingOutcome const outcome = eplab::predict_unfolding(d);

    std::vector<Complex> eigs = eplab::dense_eigenvalues(h.dense());
    std::stable_sort(eigs.begin(), eigs.end(), [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
    eigs.resize(static_cast<std::size_t>(d.ep_order));
    eigs = eplab::sorted_eigenvalues(std::move(eigs));

    with_output(out, [&](std::ostream& os) {
        os << "n = " << n << ", t = " << format_number(t) << ", EP(" << d.ep_order << ") at t = " << t_star
           << '\n';
        os << "W(N,1) = " << complex_text(d.w_n1()) << ", fine-tuned: " << (d.fine_tuned ? "yes" : "no")
           << '\n';
        os << "eigenvalues nearest the EP:\n";
        for (Complex e : eigs)
            os << "  " << complex_text(e) << '\n';
        if (outcome.status == eplab::UnfoldingStatus::FineTuned) {
            os << "ring prediction: not applicable (fine-tuned perturbation)\n";
            return;
        }
        auto const& p = *outcome.prediction;
        os << "ring radius " << format_number(p.radius) << ", real members " << p.real_on_ring << '\n';
        for (Complex e : p.ring)
            os << "  " << complex_text(e) << '\n';
        os << "max distance to ring " << format_number(eplab::ring_deviation(eigs, p)) << '\n';
    });
    return kExitOk;
}

int run_verify(eplab::VerifyOptions const& opts, std::string const& format, std::string const& out)
{
    if (format != "text" && format != "json")
        throw eplab::InvalidArgument("verify: --format must be text or json");
    eplab::VerifyReport const report = eplab::verify_suite(opts);
    with_output(out, [&](std::ostream& os) {
        if (format == "json")
            eplab::write_report_json(os, report);
        else
            eplab::write_report_text(os, report);
    });
    return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exceptional-point toolkit for the tridiagonal PT-symmetric model family"};
    app.require_subcommand(1);

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Eigenvalues on a uniform t grid");
    sweep->add_option("--n", sweep_args.opts.n, "Matrix dimension (even)")->capture_default_str();
    sweep->add_option("--t-min", sweep_args.opts.t_min, "First grid point")->capture_default_str();
    sweep->add_option("--t-max", sweep_args.opts.t_max, "Last grid point")->capture_default_str();
    sweep->add_option("--steps", sweep_args.opts.steps, "Number of grid points")->capture_default_str();
    sweep->add_option("--method", sweep_args.method, "poly or dense")->capture_default_str();
    sweep->add_option("--real-tol", sweep_args.opts.real_tol, "Reality tolerance")->capture_default_str();
    sweep->add_option("--cluster-tol", sweep_args.opts.cluster_tol, "Cluster tolerance")->capture_default_str();
    sweep->add_option("--format", sweep_args.format, "csv, json or gnuplot")->capture_default_str();
    sweep->add_option("--out", sweep_args.out, "Output path (stdout when omitted)");
    sweep->add_option("--jobs", sweep_args.opts.jobs, "Worker threads")->capture_default_str();

    int ep_n = 8;
    std::optional<double> ep_t;
    std::string ep_format = "text";
    std::string ep_out;
    auto* ep = app.add_subcommand("ep", "EP cascade report");
    ep->add_option("--n", ep_n, "Matrix dimension (even)")->capture_default_str();
    ep->add_option("--t", ep_t, "Also screen this t against the nearest cascade time");
    ep->add_option("--format", ep_format, "text or json")->capture_default_str();
    ep->add_option("--out", ep_out, "Output path");

    int jordan_n = 8;
    long long jordan_t = 0;
    std::string jordan_out;
    auto* jordan = app.add_subcommand("jordan", "Q and S at a decoupling time");
    jordan->add_option("--n", jordan_n, "Matrix dimension (even)")->capture_default_str();
    jordan->add_option("--t", jordan_t, "Decoupling time (integer)")->capture_default_str();
    jordan->add_option("--out", jordan_out, "Output path");

    int unfold_n = 8;
    double unfold_t = 1e-4;
    long long unfold_t_ep = 0;
    std::string unfold_out;
    auto* unfold = app.add_subcommand("unfold", "Leading-order ring vs. exact eigenvalues near an EP");
    unfold->add_option("--n", unfold_n, "Matrix dimension (even)")->capture_default_str();
    unfold->add_option("--t", unfold_t, "Perturbed parameter")->capture_default_str();
    unfold->add_option("--t-ep", unfold_t_ep, "Decoupling time of the EP")->capture_default_str();
    unfold->add_option("--out", unfold_out, "Output path");

    eplab::VerifyOptions verify_opts;
    std::string verify_format = "text";
    std::string verify_out;
    auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
    verify->add_option("--only", verify_opts.only, "Run only the named check(s)");
    verify->add_option("--seed", verify_opts.seed, "Seed of the randomized checks")->capture_default_str();
    verify->add_option("--format", verify_format, "text or json")->capture_default_str();
    verify->add_option("--out", verify_out, "Output path");
    verify->add_flag("--inject-z-perturbation", verify_opts.inject_z_perturbation,
                     "Debug: perturb the EP couplings (the EP-identity check must fail)");

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const& e) {
        return app.exit(e);
    } catch (CLI::ParseError const& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sweep->parsed())
            return run_sweep(sweep_args);
        if (ep->parsed())
            return run_ep(ep_n, ep_t, ep_format, ep_out);
        if (jordan->parsed())
            return run_jordan(jordan_n, jordan_t, jordan_out);
        if (unfold->parsed())
            return run_unfold(unfold_n, unfold_t, unfold_t_ep, unfold_out);
        if (verify->parsed())
            return run_verify(verify_opts, verify_format, verify_out);
    } catch (eplab::ConvergenceError const& e) {
        std::cerr << "eplab: " << e.what() << '\n';
        return kExitNumerical;
    } catch (eplab::ConditioningError const& e) {
        std::cerr << "eplab: " << e.what() << '\n';
        return kExitNumerical;
    } catch (eplab::NotDefectiveEnough const& e) {
        std::cerr << "eplab: " << e.what() << '\n';
        return kExitNumerical;
    } catch (eplab::SingularSystem const& e) {
        std::cerr << "eplab: " << e.what() << '\n';
        return kExitNumerical;
    } catch (eplab::Error const& e) {
        std::cerr << "eplab: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
