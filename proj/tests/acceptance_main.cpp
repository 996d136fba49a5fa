#include <cstdlib>
#include <iostream>
#include <vector>

#include "acceptance_suite.hpp"

// Runs the acceptance suite; criterion ids may be passed as arguments to run
// a subset (e.g. during triage).
int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
    return stardec::accept::run_suite(std::cout, ids);
}
