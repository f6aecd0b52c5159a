// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cstdio>

#include "mstack/verify.hpp"

int main() {
    const std::vector<mstack::CheckResult> results = mstack::run_acceptance_criteria();
    int failures = 0;
    for (const mstack::CheckResult& r : results) {
        std::printf("%s  %s", r.pass ? "PASS" : "FAIL", r.name.c_str());
        if (!r.detail.empty()) std::printf("  [%s]", r.detail.c_str());
        std::printf("\n");
        if (!r.pass) ++failures;
    }
    if (failures > 0) {
        std::printf("%d of %zu criteria FAILED\n", failures, results.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", results.size());
    return 0;
}
