#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stardec/decompose.hpp"
#include "stardec/multiset.hpp"
#include "stardec/packing.hpp"

namespace stardec {

// An instance of 3-partition: 3q positive integers, each strictly between
// a/4 and a/2 where a is the class sum. The window forces every class of a
// solution to have exactly three elements.
struct ThreePartition {
    std::vector<std::int64_t> values;

    std::int64_t q() const { return static_cast<std::int64_t>(values.size()) / 3; }
    std::int64_t a() const;
    // Throws InputError unless |values| = 3q >= 3, the sum is divisible by q,
    // and 4*v > a and 2*v < a for every value v.
    void validate() const;
};

// Backtracking search for a partition into q classes of sum a. Returns the
// classes as index triples, or nullopt when none exists. Throws CapError
// after `node_cap` search nodes.
std::optional<std::vector<std::array<int, 3>>> solve_three_partition(
    const ThreePartition& tp, std::int64_t node_cap = 10'000'000);

// Star-decomposition instance that is feasible iff the source 3-partition
// is, for odd lambda >= 3. b is half-integral when q is even, so it is kept
// doubled.
struct HardOddParams {
    std::int64_t lambda = 0, ell = 0, q = 0, a = 0;
    std::int64_t n = 0, m = 0, b2 = 0;  // b2 == 2b exactly
    IntMultiset B;  // the rounded b-sizes, q of them
    IntMultiset M;  // the full size multiset

    DecompInstance instance() const;
};

// Deterministic construction: smallest n above the size bound with the right
// congruence, then the closed formulas. Every claimed identity is re-checked
// and an InternalError thrown on any mismatch.
HardOddParams gen_hard_odd(std::int64_t lambda, const ThreePartition& tp);

// Even-lambda counterpart. The parameters come from a search rather than
// closed formulas, so the constructor may come back empty-handed.
struct HardEvenParams {
    std::int64_t lambda = 0, ell = 0, q = 0, a = 0;
    std::int64_t n = 0, m = 0, r = 0, c = 0, b = 0;
    std::int64_t x = 0, p = 0;  // r == p*x with p prime, x | n-q
    IntMultiset M;

    DecompInstance instance() const;
};

struct EvenSearchOutcome {
    std::optional<HardEvenParams> params;
    std::int64_t last_n = 0;  // last vertex count fully scanned
    std::int64_t work = 0;    // candidate checks spent
    std::string note;         // on failure: the constraint that failed most
};

// Scans n ascending; for each n tries every divisor x of n-q, every prime p
// with 2(px)^2 >= (n-1)^2 and p <= (n-q)/x - 1, and every m solving the
// integrality congruence for c, keeping the candidate with the smallest
// (n, r, m) that passes every required inequality exactly. `search_limit`
// bounds the total number of candidate checks.
EvenSearchOutcome gen_hard_even(std::int64_t lambda, const ThreePartition& tp,
                                std::int64_t search_limit = 50'000'000);

// The explicit decomposition that exists whenever the source 3-partition is
// feasible: most vertices carry full-size stars, q special vertices carry one
// oversized star that splits into the b-size plus one class of the partition.
// Throws InputError if tp is infeasible, InternalError if the guaranteed
// packing or any size accounting fails.
struct HardWitness {
    CenterSpec spec;          // per-vertex sizes before the oversize split
    std::vector<Star> stars;  // final stars, sizes exactly the instance's M
};

HardWitness hard_odd_witness(const HardOddParams& par, const ThreePartition& tp);
HardWitness hard_even_witness(const HardEvenParams& par, const ThreePartition& tp);

}  // namespace stardec
