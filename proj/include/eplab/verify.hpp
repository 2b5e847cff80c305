#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace eplab {

struct CheckResult
{
    int id = 0;
    std::string name;
    bool passed = false;
    std::string measured;
    std::string tolerance;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions
{
    /// Check names to run; empty runs all of them.
    std::vector<std::string> only;
    /// Debug: shift z_1 of every EP coupling set by +1 (the EP-identity
    /// check must then fail).
    bool inject_z_perturbation = false;
    std::uint64_t seed = 20240611;
};

struct VerifyReport
{
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    bool all_passed() const;
};

/// Names of all checks, in execution order.
std::vector<std::string_view> verify_check_names();

/// Runs the acceptance checks. Throws InvalidArgument for an unknown name in
/// opts.only; check failures are reported, not thrown.
VerifyReport verify_suite(VerifyOptions const& opts = {});

/// One line per check: PASS|FAIL, id, name, measured, tolerance, detail.
void write_report_text(std::ostream& os, VerifyReport const& report);
void write_report_json(std::ostream& os, VerifyReport const& report);

} // namespace eplab
