#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "eplab/sweep.hpp"

namespace eplab {

enum class Format { Csv, Json, Gnuplot };

/// "csv", "json" or "gnuplot"; throws InvalidArgument otherwise.
Format parse_format(std::string_view name);

/// %.17g, so that parsing the text gives back the same double.
std::string format_number(double x);

/// Header t,re_1,im_1,...,re_n,im_n,m,k,n_real and one row per record.
void write_csv(std::ostream& os, std::vector<SweepRecord> const& records, int n);
/// Array of {"t", "eigs": [[re, im], ...], "m", "k", "n_real"}; NaN becomes
/// null and a failed point carries an extra "error" string.
void write_json(std::ostream& os, std::vector<SweepRecord> const& records);
/// Plots the real eigenvalues in csv_path against t.
void write_gnuplot_script(std::ostream& os, std::string const& csv_path, int n, double real_tol);

/// Writes to path. Gnuplot writes the CSV to path and the script to
/// path + ".gp". Throws IoError naming the path.
void emit(std::vector<SweepRecord> const& records, int n, Format format, std::string const& path,
          double real_tol = kDefaultRealTol);

/// Escapes a string for a JSON literal (quotes included).
std::string json_quote(std::string_view s);

} // namespace eplab
