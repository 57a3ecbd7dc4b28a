#ifndef JF_SELFCHECK_HPP
#define JF_SELFCHECK_HPP

#include <functional>
#include <string>
#include <vector>

namespace jf {

struct CheckResult {
    bool pass = false;
    std::string detail; // one-line evidence: counts, timings, first failure
};

struct NamedCheck {
    std::string name;
    double budget_seconds; // wall-clock ceiling the check must respect
    std::function<CheckResult()> run;
};

// The acceptance suite: every repository-level property, one entry per
// criterion, in a fixed order.  Shared by `jf selftest` and the standalone
// acceptance runner so both always agree.
const std::vector<NamedCheck>& acceptance_checks();

// Times the check, catches exceptions into a failure, enforces the budget,
// and appends the elapsed seconds to the detail line.
CheckResult run_check(const NamedCheck& check);

} // namespace jf

#endif
