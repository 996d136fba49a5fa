#pragma once

#include <cstdint>
#include <vector>

#include "stardec/decompose.hpp"
#include "stardec/multigraph.hpp"
#include "stardec/packing.hpp"
#include "stardec/tournament.hpp"

namespace stardec {

// Ground-truth solvers for tiny instances. Deliberately naive and written
// against the definitions only, so they share no decision logic with the
// production flow-based code paths they are used to cross-check.
struct OracleCaps {
    std::int64_t max_total_size = 40;          // sum of star sizes (pack, decompose)
    int max_vertices = 6;                      // n
    std::int64_t max_multiplicity = 3;         // per-pair mu (pack only)
    std::int64_t max_orientations = 1'000'000;  // (lambda+1)^C(n,2) (tournament)
};

struct OracleAnswer {
    bool feasible = false;
    std::vector<Star> stars;  // witness when feasible
};

// Exact packing decision by backtracking over each prescribed star's leaf
// set. Throws CapError when the instance exceeds `caps`.
OracleAnswer oracle_pack(const Multigraph& g, const CenterSpec& spec,
                         const OracleCaps& caps = {});

// Exact packing decision by brute force over every restriction function f,
// independent of both the flow solver and the leaf backtracker: feasible iff
// the minimum of delta over all f is nonnegative. Throws CapError when more
// than `max_functions` functions would be scanned.
struct FEnumResult {
    std::int64_t min_delta = 0;
    RestrictionFunction argmin;  // first f attaining the minimum
};
FEnumResult oracle_pack_fenum(const Multigraph& g, const CenterSpec& spec,
                              std::int64_t max_functions = 20'000'000);

// Exact decision for sizes with free centers: enumerates size-to-vertex
// assignments (equal sizes in non-decreasing vertex order; no other
// symmetry breaking) and backtracks over leaves for each. Throws CapError
// when the instance exceeds `caps`.
OracleAnswer oracle_decompose(const DecompInstance& inst, const OracleCaps& caps = {});

// Exact decision by enumerating every orientation multiplicity
// out(u,v) in {0..lambda} pair by pair. Throws CapError when the orientation
// count exceeds caps.max_orientations.
bool oracle_tournament(const TournamentSpec& spec, const OracleCaps& caps = {});

}  // namespace stardec
