#ifndef YBX_VERIFY_HPP
#define YBX_VERIFY_HPP

#include <string>
#include <vector>

#include "ybx/grothcheck.hpp"

namespace ybx {

struct SuiteReport {
    std::string suite;
    CheckReport checks;
    double seconds = 0;
    bool blocking = true;   // conjecture-watch suites report but never fail
    bool passed() const { return !blocking || checks.all_pass(); }
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name);
// all suites, using up to `threads` workers (0 = YBX_THREADS or hardware)
std::vector<SuiteReport> run_all_suites(int threads = 0);

} // namespace ybx

#endif
