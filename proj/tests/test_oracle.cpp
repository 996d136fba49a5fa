#include <doctest.h>

#include "stardec/decompose.hpp"
#include "stardec/errors.hpp"
#include "stardec/multigraph.hpp"
#include "stardec/oracle.hpp"
#include "stardec/packing.hpp"
#include "stardec/tournament.hpp"

using namespace stardec;

namespace {

CenterSpec spec_of(std::initializer_list<std::initializer_list<std::int64_t>> sizes) {
    CenterSpec spec;
    for (const auto& one : sizes) {
        IntMultiset ms;
        for (std::int64_t s : one) ms.add(s);
        spec.centers.push_back(std::move(ms));
    }
    return spec;
}

}  // namespace

TEST_CASE("leaf backtracker on packings") {
    // Two identical 2-stars at one vertex of the doubled triangle: a packing,
    // not a decomposition, because the third pair stays uncovered.
    const Multigraph g2 = Multigraph::complete(2, 3);
    const OracleAnswer twin = oracle_pack(g2, spec_of({{2, 2}, {}, {}}));
    CHECK(twin.feasible);
    CHECK(coverage_check(g2, twin.stars, /*exact=*/false).ok);

    // Two 2-stars on the simple triangle always collide on some pair.
    const Multigraph g1 = Multigraph::complete(1, 3);
    CHECK_FALSE(oracle_pack(g1, spec_of({{2}, {2}, {}})).feasible);
    const FEnumResult fe = oracle_pack_fenum(g1, spec_of({{2}, {2}, {}}));
    CHECK(fe.min_delta == -1);
    CHECK(delta_eval(g1, spec_of({{2}, {2}, {}}), fe.argmin).delta == -1);
}

TEST_CASE("function enumeration on the doubled 10-clique golden") {
    const Multigraph g = Multigraph::complete(2, 10);
    CenterSpec spec;
    spec.centers.assign(10, IntMultiset{});
    for (int v = 0; v < 2; ++v) {
        spec.centers[static_cast<std::size_t>(v)].add(9);
        spec.centers[static_cast<std::size_t>(v)].add(5);
    }
    for (int v = 2; v < 6; ++v) {
        spec.centers[static_cast<std::size_t>(v)].add(9);
        spec.centers[static_cast<std::size_t>(v)].add(1);
    }
    for (int v = 6; v < 10; ++v) spec.centers[static_cast<std::size_t>(v)].add(5);
    REQUIRE(spec.total_size() == 88);

    const FEnumResult fe = oracle_pack_fenum(g, spec);
    CHECK(fe.min_delta == -2);
    const DeltaReport rep = delta_eval(g, spec, fe.argmin);
    CHECK(rep.delta == -2);
    // A tight function budget is refused rather than scanned halfway.
    CHECK_THROWS_AS(oracle_pack_fenum(g, spec, 1000), CapError);
}

TEST_CASE("size caps refuse oversized oracle calls") {
    // 41 > the total-size cap of 40
    const Multigraph g6 = Multigraph::complete(2, 6);
    CenterSpec big = spec_of({{5, 5, 4}, {5, 5, 4}, {5, 4}, {4}, {}, {}});
    REQUIRE(big.total_size() == 41);
    CHECK_THROWS_AS(oracle_pack(g6, big), CapError);

    // 7 vertices > the vertex cap of 6
    const Multigraph g7 = Multigraph::complete(1, 7);
    CHECK_THROWS_AS(oracle_pack(g7, spec_of({{1}, {}, {}, {}, {}, {}, {}})), CapError);

    // per-pair multiplicity 4 > the cap of 3
    const Multigraph g4 = Multigraph::complete(4, 3);
    CHECK_THROWS_AS(oracle_pack(g4, spec_of({{1}, {}, {}})), CapError);

    // raised caps let the same calls through
    OracleCaps wide;
    wide.max_total_size = 60;
    wide.max_vertices = 8;
    wide.max_multiplicity = 4;
    CHECK(oracle_pack(g7, spec_of({{1}, {}, {}, {}, {}, {}, {}}), wide).feasible);
    CHECK(oracle_pack(g4, spec_of({{1}, {}, {}}), wide).feasible);
}

TEST_CASE("assignment enumeration decides tiny decompositions") {
    DecompInstance feas;
    feas.lambda = 1;
    feas.n = 5;
    for (std::int64_t s : {4, 3, 2, 1}) feas.sizes.add(s);
    const OracleAnswer yes = oracle_decompose(feas);
    CHECK(yes.feasible);
    CHECK(verify_decomposition(feas, yes.stars));

    DecompInstance infeas;
    infeas.lambda = 1;
    infeas.n = 5;
    for (std::int64_t s : {4, 4, 2}) infeas.sizes.add(s);
    CHECK_FALSE(oracle_decompose(infeas).feasible);

    DecompInstance toobig;
    toobig.lambda = 1;
    toobig.n = 7;
    toobig.sizes.add(1, 21);
    CHECK_THROWS_AS(oracle_decompose(toobig), CapError);
}

TEST_CASE("orientation enumeration caps out on wide instances") {
    TournamentSpec tiny;
    tiny.lambda = 1;
    tiny.a = {1, 1, 1};
    tiny.b = {0, 0, 0};
    CHECK(oracle_tournament(tiny));

    // (3+1)^C(6,2) = 4^15 orientations exceed the million cap.
    TournamentSpec wide;
    wide.lambda = 3;
    wide.a.assign(6, 0);
    wide.b.assign(6, 0);
    std::int64_t left = 3 * 15;
    for (std::size_t v = 0; v < 6; ++v) {
        const std::int64_t take = std::min<std::int64_t>(left, 3 * 5);
        wide.a[v] = take;
        left -= take;
    }
    REQUIRE(left == 0);
    CHECK_THROWS_AS(oracle_tournament(wide), CapError);
}
