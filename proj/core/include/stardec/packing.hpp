#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "stardec/maxflow.hpp"
#include "stardec/multigraph.hpp"
#include "stardec/multiset.hpp"

namespace stardec {

// Prescribed star sizes per vertex: centers[v] is the multiset of sizes whose
// stars must be centred at v (possibly empty).
struct CenterSpec {
    std::vector<IntMultiset> centers;

    std::int64_t total_size() const;   // sum of all prescribed sizes
    std::int64_t star_count() const;   // number of prescribed stars
};

struct RestrictionFunction {
    std::vector<std::int64_t> f;  // 0 <= f[v] <= |centers[v]|
};

struct DeltaReport {
    std::int64_t minus = 0;  // edges demanded by each vertex's f(v) largest stars
    std::int64_t plus = 0;   // edges surviving the per-pair cap min(f(u)+f(v), mu)
    std::int64_t delta = 0;  // plus - minus; any f with delta < 0 refutes the packing
};

DeltaReport delta_eval(const Multigraph& g, const CenterSpec& spec, const RestrictionFunction& f);

// The packing network and enough layout to read answers back out of a flow.
// Node order: source, then one node per prescribed star (vertex ascending,
// size descending, occurrence), then one node per graph pair (lexicographic),
// then sink. Arc order: source->star arcs, then each star's unit arcs (leaf
// ascending), then pair->sink arcs.
struct PackingNetwork {
    FlowNetwork net;
    std::vector<std::pair<int, std::int64_t>> star_nodes;  // (vertex, size) per star node
    std::vector<std::pair<int, int>> pair_nodes;           // (u,v) with u < v
    std::size_t unit_arcs_begin = 0;                       // first star->pair arc index
    std::size_t sink_arcs_begin = 0;                       // first pair->sink arc index
};

PackingNetwork build_packing_network(const Multigraph& g, const CenterSpec& spec);

struct PackResult {
    bool feasible = false;
    std::vector<Star> stars;  // set when feasible
    RestrictionFunction f;    // set when infeasible: derived from the min cut
    DeltaReport report;       // its evaluation; report.delta < 0 always holds then
};

// Decides whether g packs with exactly the prescribed stars, and constructs
// either the packing or a restriction function refuting it.
PackResult pack_with_centers(const Multigraph& g, const CenterSpec& spec);

// Multistar with centre c: center_mults are the edge multiplicities mu(cv).
// True iff stars of the given sizes pack into it: the top-s sizes must fit in
// the edges usable by s stars, for every s.
bool multistar_feasible(const IntMultiset& center_mults, const IntMultiset& sizes);

// Splits a multistar (leaf -> multiplicity) into stars of exactly the given
// sizes; requires sigma(sizes) == total multiplicity. Routed through
// pack_with_centers so there is a single verified packing code path.
// Infeasible inputs throw InputError naming the violated prefix length s.
std::vector<Star> multistar_decompose(int center, const std::map<int, std::int64_t>& leaf_mults,
                                      const IntMultiset& sizes);

}  // namespace stardec
