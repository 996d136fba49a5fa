#pragma once

#include <cstdint>
#include <vector>

#include "stardec/multigraph.hpp"
#include "stardec/multiset.hpp"

namespace stardec {

// Record of pairwise size merges. Replaying `merges` backwards over
// final_sizes reconstructs the original multiset exactly; every merged size
// stays <= the working bound m.
struct MergePlan {
    IntMultiset final_sizes;
    struct Merge {
        std::int64_t merged = 0;  // == left + right
        std::int64_t left = 0;
        std::int64_t right = 0;
    };
    std::vector<Merge> merges;  // chronological
};

// Repeatedly merges the two smallest sizes while their sum stays <= m.
// Afterwards any two remaining sizes (with multiplicity) sum to more than m.
MergePlan merge_small(const IntMultiset& sizes, std::int64_t m);

// Undoes a merge plan on a realized star list: each recorded merge, taken in
// reverse, splits one star of the merged size into two stars at the same
// center, the lowest-id leaves going to the left part.
std::vector<Star> split_back(std::vector<Star> stars, const MergePlan& plan);

struct Assignment {
    std::vector<IntMultiset> per_vertex;
};

// Largest unassigned size goes to a vertex of minimum assigned sum, lowest
// index on ties. The classic balancing guarantees hold when every size is
// <= m, any two sizes sum to > m, and m > n/2; callers that rely on them
// validate that themselves.
Assignment greedy_assign(const IntMultiset& sizes, std::int64_t n);

// Starts from greedy_assign (its cardinalities are already balanced) and
// swaps size pairs between vertices until no violation of the balance
// condition remains: whenever sum(M_u) < sum(M_v), x in M_u, y in M_v, x < y,
// it must hold that sum(M_v) - sum(M_u) <= y - x. Each swap strictly shrinks
// the integer variance of the sums, so the loop terminates.
Assignment equitable_assign(const IntMultiset& sizes, std::int64_t n);

// Replaces one vertex's size multiset by a same-sum multiset with at most
// ell+2 (odd) / ell+1 (even) elements, all <= m, whose top-i sums dominate
// the original's. The host multistar of the compressed stars can therefore
// be re-split into the original sizes afterwards.
//
// case1 applies when every vertex sum lies in (k*m, (k+2)*m] for some
// k >= ell+1 (odd) / k >= ell (even); otherwise sums lie in the band
// (off*m, (off+2)*m] where off = ell (odd) / ell-1 (even) and k is ignored.
IntMultiset compress_odd(const IntMultiset& m_v, std::int64_t m, std::int64_t ell, bool case1,
                         std::int64_t k);
IntMultiset compress_even(const IntMultiset& m_v, std::int64_t m, std::int64_t ell, bool case1,
                          std::int64_t k);

}  // namespace stardec
