// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion.  Exit status 0 only if everything
// passes at the default configuration.

#include <cstdio>
#include <cstring>

#include "kmu/checks.hpp"

int main(int argc, char** argv) {
    kmu::RunConfig config;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--data") && i + 1 < argc) config.data_dir = argv[++i];
        if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) config.seed = std::strtoull(argv[++i], nullptr, 10);
        if (!std::strcmp(argv[i], "--only") && i + 1 < argc) config.only = argv[++i];
    }
    std::printf("acceptance run: prime=%u seed=%llu budget=%lld\n", config.prime,
                static_cast<unsigned long long>(config.seed), config.budget);
    auto results = kmu::run_paper_checks(config);
    int failed = 0;
    for (const auto& r : results) {
        std::printf("%-12s %-4s %s%s%s  [%.2fs]\n", r.status_name().c_str(), r.id.c_str(),
                    r.title.c_str(), r.detail.empty() ? "" : " -- ", r.detail.c_str(), r.seconds);
        if (r.status != kmu::CheckResult::Status::pass) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
    return failed ? 1 : 0;
}
