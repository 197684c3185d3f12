// Acceptance suite: runs every verification suite and prints one line per
// criterion.  Exit status 0 iff all blocking criteria pass.
#include <cstdio>
#include <cstring>

#include "ybx/verify.hpp"

int main(int argc, char** argv) {
    using namespace ybx;
    bool all_pass = true;
    std::vector<std::string> names = suite_names();
    if (argc > 1) names.assign(argv + 1, argv + argc);
    for (const auto& name : names) {
        SuiteReport rep = run_suite(name);
        for (auto& line : rep.checks.lines) {
            const char* status = line.pass ? "PASS" : (rep.blocking ? "FAIL" : "FAIL(non-blocking)");
            std::printf("%s %s: %s\n", status, rep.suite.c_str(), line.name.c_str());
        }
        std::printf("%s suite %-16s (%zu checks, %.2fs)\n",
                    rep.passed() ? "PASS" : "FAIL", rep.suite.c_str(),
                    rep.checks.lines.size(), rep.seconds);
        std::fflush(stdout);
        if (!rep.passed()) all_pass = false;
    }
    std::printf(all_pass ? "ACCEPTANCE: ALL PASS\n" : "ACCEPTANCE: FAILURES\n");
    return all_pass ? 0 : 1;
}
