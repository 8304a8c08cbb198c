#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kmu/json_io.hpp"

namespace kmu {

struct RunConfig {
    std::uint32_t prime = 101;
    std::uint64_t seed = 1;
    long long budget = 1'000'000;
    std::string data_dir;  // empty = compiled-in default
    std::string only;      // run only checks whose id starts with this
    int jobs = 1;          // worker pool size; results assemble in id order
};

struct CheckResult {
    enum class Status { pass, fail, inconclusive };
    std::string id;
    std::string title;
    Status status = Status::pass;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;

    std::string status_name() const {
        switch (status) {
            case Status::pass: return "PASS";
            case Status::fail: return "FAIL";
            case Status::inconclusive: return "INCONCLUSIVE";
        }
        return "?";
    }
};

// The whole desk-scale verification battery: Pfaffian and codim-2
// identities, elimination round trips, node counts, invariant tables, the
// smoothness verdicts, the linkage diagram, catalog integrity and the
// property suites.  Deterministic for a fixed RunConfig.
std::vector<CheckResult> run_paper_checks(const RunConfig& config);

// byte-stable report (no wall-clock data; timings go to the text log)
Json checks_to_json(const std::vector<CheckResult>& results, const RunConfig& config);

// 0 all pass, 1 any fail, 2 inconclusive only
int exit_code_for(const std::vector<CheckResult>& results);

}  // namespace kmu
