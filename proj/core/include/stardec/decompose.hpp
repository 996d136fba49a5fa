#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stardec/multigraph.hpp"
#include "stardec/multiset.hpp"
#include "stardec/packing.hpp"

namespace stardec {

// A request to decompose lambda*K_n into stars whose sizes form `sizes`.
struct DecompInstance {
    int64_t lambda = 0;
    int n = 0;
    IntMultiset sizes;

    // Throws InputError unless lambda >= 1, n >= 1, sigma(sizes) equals
    // lambda * n * (n - 1) / 2 and every size is at most n - 1.
    void validate() const;
};

// Diagnostics from a decompose() run, for logging and tests.
struct DecompStats {
    bool exact_route = false;   // solved by the small-n exact decider
    int64_t bound = 0;          // size bound the pipeline worked against
    int64_t merged_count = 0;   // star count after merging small sizes
    int64_t flow_value = 0;     // packing flow value (0 on the exact route)
};

// Decomposes lambda*K_n when every size is within the guaranteed bound
// (see max_star_bound). Requires lambda >= 2. Throws ThresholdError if some
// size exceeds the bound, InputError on malformed instances, InternalError
// if any step the construction guarantees were to fail.
std::vector<Star> decompose(const DecompInstance& inst, DecompStats* stats = nullptr);

// Exhaustive decider: enumerates assignments of the sizes to vertices (up to
// vertex relabeling) and runs the packing feasibility test on each. Returns a
// decomposition if one exists, nullopt otherwise. Throws CapError once more
// than `assignment_cap` assignments have been tried.
std::optional<std::vector<Star>> decide_exact(const DecompInstance& inst,
                                              int64_t assignment_cap = 20'000'000);

// One failed try of attempt(): the assignment strategy used plus the
// restriction function certifying that this particular center assignment
// admits no packing. The certificate refutes only the tried assignment, so a
// fully unsuccessful attempt() is inconclusive for the instance itself.
struct AttemptCertificate {
    std::string strategy;
    RestrictionFunction f;
    DeltaReport report;
};

struct AttemptOutcome {
    bool success = false;
    std::vector<Star> stars;     // verified decomposition when success
    std::string strategy;        // winning strategy when success
    int64_t tries_used = 0;
    std::vector<AttemptCertificate> certificates;  // one per failed try
};

// Best-effort decomposition for instances decompose() cannot promise to
// handle (any lambda >= 1, sizes up to n - 1). When the instance is within
// decompose()'s bound that route is taken first and always wins. Otherwise
// tries a greedy assignment, then an equitable one, then seeded random
// assignments until `tries` runs out. `threads` > 1 runs tries in parallel
// batches; the winner is always the lowest successful try index and reported
// certificates are exactly the failed tries below it, so results depend only
// on (instance, tries, seed).
AttemptOutcome attempt(const DecompInstance& inst, int64_t tries, uint64_t seed,
                       int threads = 1);

// Checks that `stars` is a decomposition of lambda*K_n with exactly the
// requested sizes. On failure returns false and, if `why` is non-null,
// stores a human-readable reason.
bool verify_decomposition(const DecompInstance& inst, const std::vector<Star>& stars,
                          std::string* why = nullptr);

}  // namespace stardec
