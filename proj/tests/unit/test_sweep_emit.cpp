#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "eplab/emit.hpp"
#include "eplab/error.hpp"
#include "eplab/sweep.hpp"

using namespace eplab;

namespace {

std::vector<std::string> split(std::string const& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        out.push_back(item);
    return out;
}

std::string read_file(std::filesystem::path const& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path scratch_dir()
{
    auto const dir = std::filesystem::temp_directory_path() / "eplab_test_sweep_emit";
    std::filesystem::create_directories(dir);
    return dir;
}

SweepRecord const& nearest(std::vector<SweepRecord> const& records, double t)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < records.size(); ++i)
        if (std::abs(records[i].t - t) < std::abs(records[best].t - t))
            best = i;
    return records[best];
}

std::string csv_of(std::vector<SweepRecord> const& records, int n)
{
    std::ostringstream os;
    write_csv(os, records, n);
    return os.str();
}

} // namespace

TEST_CASE("sweep grid")
{
    auto const g = sweep_grid(-1.0, 18.0, 400);
    REQUIRE(g.size() == 400);
    CHECK(g.front() == -1.0);
    CHECK(g.back() == 18.0);
    for (std::size_t i = 1; i < g.size(); ++i)
        CHECK(g[i] > g[i - 1]);
    // Step 19/399 = 1/21 puts the integer EP times on the grid.
    for (double t : {0.0, 7.0, 12.0, 15.0, 16.0}) {
        double best = std::numeric_limits<double>::infinity();
        for (double x : g)
            best = std::min(best, std::abs(x - t));
        CHECK(best <= 1e-12);
    }

    CHECK(sweep_grid(0.0, 1.0, 2) == std::vector<double>{0.0, 1.0});
    CHECK_THROWS_AS(sweep_grid(0.0, 1.0, 1), InvalidArgument);
    CHECK_THROWS_AS(sweep_grid(1.0, 1.0, 5), InvalidArgument);
    CHECK_THROWS_AS(sweep_grid(2.0, 1.0, 5), InvalidArgument);
}

TEST_CASE("sweep point examples")
{
    SweepRecord const herm = sweep_point(8, 16.5, Method::PolyRoots, kDefaultRealTol, kDefaultClusterTol);
    CHECK(herm.n_real == 8);
    CHECK(herm.m == 4);
    CHECK(herm.eigenvalues.size() == 8);
    CHECK_FALSE(herm.error.has_value());

    SweepRecord const pt = sweep_point(8, 15.5, Method::PolyRoots, kDefaultRealTol, kDefaultClusterTol);
    CHECK(pt.n_real == 8);
    CHECK(pt.m < 4);

    SweepRecord const neg = sweep_point(4, -0.01, Method::PolyRoots, kDefaultRealTol, kDefaultClusterTol);
    CHECK(neg.n_real == 0);

    for (Method method : {Method::PolyRoots, Method::Dense}) {
        SweepRecord const r = sweep_point(8, 3.3, method, kDefaultRealTol, kDefaultClusterTol);
        for (std::size_t i = 1; i < r.eigenvalues.size(); ++i) {
            auto const& a = r.eigenvalues[i - 1];
            auto const& b = r.eigenvalues[i];
            CHECK((a.real() < b.real() || (a.real() == b.real() && a.imag() <= b.imag())));
        }
    }
}

TEST_CASE("default sweep")
{
    SweepOptions opts;
    opts.jobs = 4;
    auto const records = sweep(opts);
    REQUIRE(records.size() == 400);
    SweepRecord const& near = nearest(records, 16.5);
    CHECK(near.t > 16.0);
    CHECK(near.n_real == 8);
    CHECK(near.m == 4);
    for (auto const& r : records) {
        CHECK_FALSE(r.error.has_value());
        CHECK(r.eigenvalues.size() == 8);
        if (r.t > 15.0 + 1e-9)
            CHECK(r.n_real == 8);
    }
    CHECK(records.front().n_real < 8);

    SweepOptions bad;
    bad.jobs = 0;
    CHECK_THROWS_AS(sweep(bad), InvalidArgument);
}

TEST_CASE("parallel sweeps are identical")
{
    SweepOptions opts;
    opts.n = 6;
    opts.steps = 97;
    std::string const serial = csv_of(sweep(opts), opts.n);
    for (int jobs : {2, 3, 8}) {
        opts.jobs = jobs;
        CHECK(csv_of(sweep(opts), opts.n) == serial);
    }
}

TEST_CASE("csv of a 3-point n = 2 sweep")
{
    SweepOptions opts;
    opts.n = 2;
    opts.t_min = -1.0;
    opts.t_max = 2.0;
    opts.steps = 3;
    auto const records = sweep(opts);
    std::string const text = csv_of(records, 2);
    CHECK(text.find('\r') == std::string::npos);
    CHECK(text.back() == '\n');
    auto const lines = split(text, '\n');
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "t,re_1,im_1,re_2,im_2,m,k,n_real");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto const fields = split(lines[i], ',');
        REQUIRE(fields.size() == 8);
        CHECK(lines[i].back() != ',');
        SweepRecord const& r = records[i - 1];
        CHECK(std::strtod(fields[0].c_str(), nullptr) == r.t);
        for (std::size_t e = 0; e < 2; ++e) {
            CHECK(std::strtod(fields[1 + 2 * e].c_str(), nullptr) == r.eigenvalues[e].real());
            CHECK(std::strtod(fields[2 + 2 * e].c_str(), nullptr) == r.eigenvalues[e].imag());
        }
        CHECK(std::stoi(fields[5]) == r.m);
        CHECK(std::stoi(fields[6]) == r.k);
        CHECK(std::stoi(fields[7]) == r.n_real);
    }
    // n = 2: E^2 = 1 - z_1 = t.
    CHECK(records[0].n_real == 0);
    CHECK(records[2].n_real == 2);
    CHECK(std::abs(records[2].eigenvalues[1] - std::sqrt(2.0)) <= 1e-14);
}

TEST_CASE("numbers round-trip")
{
    for (double x : {0.1, -1.0 / 3.0, 1e-300, 6.02214076e23, 0.0, -0.0, 16.5})
        CHECK(std::strtod(format_number(x).c_str(), nullptr) == x);
    CHECK(format_number(0.5) == "0.5");
}

TEST_CASE("json layout")
{
    SweepOptions opts;
    opts.n = 2;
    opts.t_min = 0.0;
    opts.t_max = 2.0;
    opts.steps = 2;
    std::ostringstream os;
    write_json(os, sweep(opts));
    std::string const text = os.str();
    CHECK(text.front() == '[');
    CHECK(text.find("\"t\": 0,") != std::string::npos);
    CHECK(text.find("\"eigs\": [[") != std::string::npos);
    CHECK(text.find("\"m\": ") != std::string::npos);
    CHECK(text.find("\"k\": ") != std::string::npos);
    CHECK(text.find("\"n_real\": 2") != std::string::npos);
    CHECK(text.find("\"error\"") == std::string::npos);

    SweepRecord failed;
    failed.t = 1.0;
    failed.eigenvalues = {Complex(std::nan(""), std::nan(""))};
    failed.n_real = -1;
    failed.error = "no \"convergence\"";
    std::ostringstream fs;
    write_json(fs, {failed});
    CHECK(fs.str().find("[null, null]") != std::string::npos);
    CHECK(fs.str().find(R"("error": "no \"convergence\"")") != std::string::npos);
}

TEST_CASE("format names")
{
    CHECK(parse_format("csv") == Format::Csv);
    CHECK(parse_format("json") == Format::Json);
    CHECK(parse_format("gnuplot") == Format::Gnuplot);
    CHECK_THROWS_AS(parse_format("xml"), InvalidArgument);
    CHECK(json_quote("a\"b\\c\n") == "\"a\\\"b\\\\c\\n\"");
}

TEST_CASE("emit to files")
{
    SweepOptions opts;
    opts.n = 4;
    opts.steps = 5;
    auto const records = sweep(opts);
    auto const dir = scratch_dir();

    auto const csv = dir / "s.csv";
    emit(records, 4, Format::Csv, csv.string());
    CHECK(read_file(csv) == csv_of(records, 4));

    auto const json = dir / "s.json";
    emit(records, 4, Format::Json, json.string());
    std::ostringstream js;
    write_json(js, records);
    CHECK(read_file(json) == js.str());

    auto const plot = dir / "p.csv";
    emit(records, 4, Format::Gnuplot, plot.string());
    CHECK(read_file(plot) == csv_of(records, 4));
    std::string const script = read_file(plot.string() + ".gp");
    CHECK(script.find(plot.string()) != std::string::npos);
    CHECK(script.find("for [i=1:4]") != std::string::npos);

    std::string const bad = (dir / "missing" / "x.csv").string();
    try {
        emit(records, 4, Format::Csv, bad);
        FAIL("expected IoError");
    } catch (IoError const& e) {
        CHECK(std::string(e.what()).find(bad) != std::string::npos);
    }
}
