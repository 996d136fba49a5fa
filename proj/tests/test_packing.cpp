#include <doctest.h>

#include <map>
#include <random>

#include "stardec/errors.hpp"
#include "stardec/multigraph.hpp"
#include "stardec/multiset.hpp"
#include "stardec/oracle.hpp"
#include "stardec/packing.hpp"
#include "stardec/rand.hpp"

using namespace stardec;

namespace {

CenterSpec spec_of(std::initializer_list<std::initializer_list<std::int64_t>> per_vertex) {
    CenterSpec spec;
    for (const auto& sizes : per_vertex) {
        IntMultiset m;
        for (std::int64_t s : sizes) m.add(s);
        spec.centers.push_back(std::move(m));
    }
    return spec;
}

void check_realized(const Multigraph& g, const CenterSpec& spec, const std::vector<Star>& stars) {
    REQUIRE(coverage_check(g, stars, false).ok);
    std::vector<IntMultiset> got(spec.centers.size());
    for (const Star& s : stars) got[static_cast<std::size_t>(s.center)].add(s.size());
    for (std::size_t v = 0; v < spec.centers.size(); ++v) REQUIRE(got[v] == spec.centers[v]);
}

}  // namespace

TEST_CASE("restriction function evaluation by hand") {
    const Multigraph g = Multigraph::complete(1, 3);
    const CenterSpec spec = spec_of({{2}, {1}, {}});
    RestrictionFunction f;
    f.f = {1, 0, 0};
    const DeltaReport r = delta_eval(g, spec, f);
    // One 2-star demanded; pairs (0,1) and (0,2) capped at 1, (1,2) at min(0,1).
    CHECK(r.minus == 2);
    CHECK(r.plus == 2);
    CHECK(r.delta == 0);

    f.f = {1, 1, 0};
    const DeltaReport r2 = delta_eval(g, spec, f);
    CHECK(r2.minus == 3);
    CHECK(r2.plus == 3);  // (0,1) -> min(2,1)=1, (0,2) -> 1, (1,2) -> 1
    CHECK(r2.delta == 0);
}

TEST_CASE("packing a complete graph with prescribed centers") {
    const Multigraph g = Multigraph::complete(1, 4);
    // One 3-star, one 2-star, one 1-star: decomposes K4 exactly.
    const CenterSpec spec = spec_of({{3}, {2}, {1}, {}});
    const PackResult pr = pack_with_centers(g, spec);
    REQUIRE(pr.feasible);
    check_realized(g, spec, pr.stars);
    CHECK(coverage_check(g, pr.stars, true).ok);
}

TEST_CASE("infeasible prescription yields a negative certificate") {
    const Multigraph g = Multigraph::complete(1, 4);
    const CenterSpec spec = spec_of({{3}, {3}, {}, {}});
    const PackResult pr = pack_with_centers(g, spec);
    REQUIRE_FALSE(pr.feasible);
    CHECK(pr.report.delta < 0);
    CHECK(delta_eval(g, spec, pr.f).delta == pr.report.delta);
}

TEST_CASE("golden two-fold ten-clique prescription") {
    const Multigraph g = Multigraph::complete(2, 10);
    CenterSpec spec;
    spec.centers.resize(10);
    for (int v = 0; v < 2; ++v) {
        spec.centers[v].add(9);
        spec.centers[v].add(5);
    }
    for (int v = 2; v < 6; ++v) {
        spec.centers[v].add(9);
        spec.centers[v].add(1);
    }
    for (int v = 6; v < 10; ++v) spec.centers[v].add(5);
    const PackResult pr = pack_with_centers(g, spec);
    REQUIRE_FALSE(pr.feasible);
    CHECK(delta_eval(g, spec, pr.f).delta < 0);
    CHECK(oracle_pack_fenum(g, spec).min_delta == -2);
}

TEST_CASE("flow decision matches leaf backtracker on random instances") {
    for (int rep = 0; rep < 400; ++rep) {
        std::mt19937_64 rng(substream_seed(0x9ACCull, static_cast<std::uint64_t>(rep)));
        const int n = 1 + static_cast<int>(bounded_rand(rng, 5));
        Multigraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                const auto m = static_cast<std::int64_t>(bounded_rand(rng, 4));
                if (m > 0) g.add_edges(u, v, m);
            }
        CenterSpec spec;
        spec.centers.resize(static_cast<std::size_t>(n));
        std::int64_t left = static_cast<std::int64_t>(bounded_rand(rng, 11));
        while (left > 0) {
            const auto v = static_cast<std::size_t>(bounded_rand(rng, static_cast<std::uint64_t>(n)));
            const std::int64_t s =
                1 + static_cast<std::int64_t>(
                        bounded_rand(rng, static_cast<std::uint64_t>(std::min<std::int64_t>(n, left))));
            spec.centers[v].add(s);
            left -= s;
        }
        const PackResult pr = pack_with_centers(g, spec);
        const OracleAnswer oa = oracle_pack(g, spec);
        REQUIRE(pr.feasible == oa.feasible);
        if (pr.feasible) check_realized(g, spec, pr.stars);
        else REQUIRE(delta_eval(g, spec, pr.f).delta < 0);
    }
}

TEST_CASE("multistar feasibility is the prefix inequality") {
    IntMultiset caps;  // two leaves, three parallel edges each
    caps.add(3, 2);
    IntMultiset sizes;
    sizes.add(2, 3);
    CHECK(multistar_feasible(caps, sizes));
    IntMultiset too_wide;
    too_wide.add(3, 2);
    CHECK_FALSE(multistar_feasible(caps, too_wide));  // a 3-star needs 3 distinct leaves

    // Tight at every prefix: caps {2,1,1}, sizes {3,1}.
    IntMultiset caps2;
    caps2.add(2);
    caps2.add(1, 2);
    IntMultiset sizes2;
    sizes2.add(3);
    sizes2.add(1);
    CHECK(multistar_feasible(caps2, sizes2));
}

TEST_CASE("multistar split returns exactly the requested sizes") {
    std::map<int, std::int64_t> leaf_mults = {{1, 2}, {2, 1}, {3, 1}};
    IntMultiset sizes;
    sizes.add(2, 2);
    const std::vector<Star> stars = multistar_decompose(0, leaf_mults, sizes);
    REQUIRE(stars.size() == 2);
    std::map<int, std::int64_t> used;
    for (const Star& s : stars) {
        CHECK(s.center == 0);
        CHECK(s.size() == 2);
        for (int leaf : s.leaves) ++used[leaf];
    }
    CHECK(used == leaf_mults);

    IntMultiset impossible;
    impossible.add(4);
    CHECK_THROWS_AS(multistar_decompose(0, leaf_mults, impossible), InputError);
}
