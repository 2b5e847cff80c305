// One line per acceptance criterion; nonzero exit if any of them fails.
#include <cstdio>
#include <exception>
#include <iostream>

#include "eplab/verify.hpp"

int main()
{
    try {
        eplab::VerifyReport const report = eplab::verify_suite();
        eplab::write_report_text(std::cout, report);
        int failed = 0;
        for (auto const& c : report.checks)
            failed += c.passed ? 0 : 1;
        std::printf("%zu criteria, %d failed, %.3f s\n", report.checks.size(), failed, report.seconds);
        return failed == 0 && report.checks.size() == 12 ? 0 : 1;
    } catch (std::exception const& e) {
        std::fprintf(stderr, "acceptance: %s\n", e.what());
        return 1;
    }
}
