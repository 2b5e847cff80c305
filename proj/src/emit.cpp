#include "eplab/emit.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "eplab/error.hpp"

namespace eplab {

namespace {

std::string json_number(double x)
{
    return std::isfinite(x) ? format_number(x) : "null";
}

std::ofstream open_output(std::string const& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    return out;
}

void finish(std::ofstream& out, std::string const& path)
{
    out.flush();
    if (!out)
        throw IoError("write to '" + path + "' failed");
}

} // namespace

Format parse_format(std::string_view name)
{
    if (name == "csv")
        return Format::Csv;
    if (name == "json")
        return Format::Json;
    if (name == "gnuplot")
        return Format::Gnuplot;
    throw InvalidArgument("unknown format '" + std::string(name) + "' (expected csv, json or gnuplot)");
}

std::string format_number(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_csv(std::ostream& os, std::vector<SweepRecord> const& records, int n)
{
    os << 't';
    for (int i = 1; i <= n; ++i)
        os << ",re_" << i << ",im_" << i;
    os << ",m,k,n_real\n";
    for (auto const& r : records) {
        os << format_number(r.t);
        for (Complex e : r.eigenvalues)
            os << ',' << format_number(e.real()) << ',' << format_number(e.imag());
        os << ',' << r.m << ',' << r.k << ',' << r.n_real << '\n';
    }
}

void write_json(std::ostream& os, std::vector<SweepRecord> const& records)
{
    os << '[';
    for (std::size_t i = 0; i < records.size(); ++i) {
        auto const& r = records[i];
        os << (i == 0 ? "\n" : ",\n") << "  {\"t\": " << format_number(r.t) << ", \"eigs\": [";
        for (std::size_t j = 0; j < r.eigenvalues.size(); ++j) {
            if (j > 0)
                os << ", ";
            os << '[' << json_number(r.eigenvalues[j].real()) << ", "
               << json_number(r.eigenvalues[j].imag()) << ']';
        }
        os << "], \"m\": " << r.m << ", \"k\": " << r.k << ", \"n_real\": " << r.n_real;
        if (r.error)
            os << ", \"error\": " << json_quote(*r.error);
        os << '}';
    }
    os << (records.empty() ? "]\n" : "\n]\n");
}

void write_gnuplot_script(std::ostream& os, std::string const& csv_path, int n, double real_tol)
{
    os << "# real eigenvalues against t\n"
       << "set datafile separator ','\n"
       << "set key off\n"
       << "set xlabel 't'\n"
       << "set ylabel 'E'\n"
       << "tol = " << format_number(real_tol) << '\n'
       << "isreal(re, im) = abs(im) <= tol * (1 + sqrt(re**2 + im**2))\n"
       << "plot for [i=1:" << n << "] " << json_quote(csv_path)
       << " skip 1 using 1:(isreal(column(2*i), column(2*i+1)) ? column(2*i) : 1/0)"
       << " with points pointtype 7 pointsize 0.3\n";
}

void emit(std::vector<SweepRecord> const& records, int n, Format format, std::string const& path,
          double real_tol)
{
    {
        std::ofstream out = open_output(path);
        if (format == Format::Json)
            write_json(out, records);
        else
            write_csv(out, records, n);
        finish(out, path);
    }
    if (format == Format::Gnuplot) {
        std::string const script = path + ".gp";
        std::ofstream out = open_output(script);
        write_gnuplot_script(out, path, n, real_tol);
        finish(out, script);
    }
}

std::string json_quote(std::string_view s)
{
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(c));
                out += buf;
            } else {
                out += c;
            }
        }
    }
    out += '"';
    return out;
}

} // namespace eplab
