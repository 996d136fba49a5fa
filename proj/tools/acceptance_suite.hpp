#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// The release gate: ten self-contained checks covering the packing
// characterization, the guaranteed decomposer, the exact small-case deciders,
// tournaments, the hard-instance generators, the flow engine and the
// threshold arithmetic. Shared by `stardec selftest` and the test suite so
// both run literally the same code with the same budgets.
namespace stardec::accept {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;  // counts on success, first failure otherwise
};

inline constexpr int kCriterionCount = 10;

// Runs one criterion (1-based). Throws nothing: failures, including
// unexpected exceptions, land in the result.
CriterionResult run_criterion(int id);

// Runs the given criteria (all ten if `ids` is empty) printing one
// PASS/FAIL line each to `out`. Returns 0 iff everything passed.
int run_suite(std::ostream& out, const std::vector<int>& ids = {});

}  // namespace stardec::accept
