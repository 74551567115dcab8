// Acceptance runner: executes every verification check at full size with its
// time budget enforced and prints one pass/fail line per check.

#include <cstring>
#include <iostream>

#include "pxp/scorecard.hpp"

int main(int argc, char** argv) {
    pxp::ScorecardOptions opts;
    opts.max_points = 10;
    opts.jobs = 2;
    opts.enforce_budgets = true;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--relaxed") == 0) opts.enforce_budgets = false;
        if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) opts.jobs = std::atoi(argv[++i]);
    }
    auto results = pxp::run_scorecard<pxp::Fp>(opts);
    std::cout << pxp::scorecard_lines(results);
    return pxp::scorecard_all_pass(results) ? 0 : 1;
}
