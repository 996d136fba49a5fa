#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stardec/packing.hpp"

namespace stardec {

// Demands on a lambda-fold tournament: out-degree a(v) exactly, at least
// b(v) distinct out-neighbours.
struct TournamentSpec {
    std::int64_t lambda = 0;
    std::vector<std::int64_t> a;
    std::vector<std::int64_t> b;

    int n() const { return static_cast<int>(a.size()); }
    // Throws InputError unless lambda >= 1, |a| == |b| >= 1, a(v) >= b(v) >= 0
    // for all v, and sum a(v) == lambda * C(n,2) (no orientation of the
    // complete multigraph has any other out-degree total).
    void validate() const;
};

// An orientation of lambda*K_n: out[u][v] edges point u -> v, and
// out[u][v] + out[v][u] == lambda for every pair.
struct Tournament {
    int n = 0;
    std::int64_t lambda = 0;
    std::vector<std::vector<std::int64_t>> out;
};

struct TournamentVerdict {
    bool feasible = false;
    int violating_k = -1;  // smallest k whose bound fails; -1 when feasible
    std::int64_t lhs = 0;  // demand at that k
    std::int64_t rhs = 0;  // capacity lambda*k*(2n-k-1)/2 at that k
};

// Decides existence by the degree/neighbourhood bound at every
// k in {0,...,n-1}: the top-k demand psi_k plus the clipped neighbourhood
// demands b_k(v) = max(0, b(v)-n+k+1) must fit in the edges available to
// any k vertices.
TournamentVerdict tournament_feasible(const TournamentSpec& spec);

struct RealizeResult {
    bool feasible = false;
    Tournament t;              // set when feasible
    RestrictionFunction f;     // packing certificate otherwise
    DeltaReport report;
};

// Constructs a tournament for the spec by packing stars on lambda*K_n with
// per-vertex sizes {b(v), 1^[a(v)-b(v)]} (b(v) >= 2) or {1^[a(v)]} and
// orienting every star edge centre -> leaf. Infeasible specs yield the
// packing's refuting restriction function.
RealizeResult realize_tournament(const TournamentSpec& spec);

// Checks pair sums, out-degrees and out-neighbourhood sizes of t against
// spec. On failure stores a reason in *why when given.
bool verify_tournament(const TournamentSpec& spec, const Tournament& t,
                       std::string* why = nullptr);

}  // namespace stardec
