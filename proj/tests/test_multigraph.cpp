#include <doctest.h>

#include <vector>

#include "stardec/errors.hpp"
#include "stardec/multigraph.hpp"

using namespace stardec;

TEST_CASE("complete view answers without storing pairs") {
    const Multigraph g = Multigraph::complete(3, 5);
    CHECK(g.is_complete());
    CHECK(g.lambda() == 3);
    CHECK(g.mu(0, 4) == 3);
    CHECK(g.mu(4, 0) == 3);
    CHECK(g.edge_total() == 30);
    std::int64_t pairs = 0;
    g.for_each_pair([&](int u, int v, std::int64_t m) {
        CHECK(u < v);
        CHECK(m == 3);
        ++pairs;
    });
    CHECK(pairs == 10);
}

TEST_CASE("explicit backing accumulates and validates") {
    Multigraph g(4);
    g.add_edges(2, 0, 2);
    g.add_edges(0, 2, 1);
    CHECK(g.mu(0, 2) == 3);
    CHECK(g.mu(2, 0) == 3);
    CHECK(g.mu(1, 3) == 0);
    CHECK(g.edge_total() == 3);

    CHECK_THROWS_AS(g.add_edges(1, 1, 1), InputError);
    CHECK_THROWS_AS(g.add_edges(0, 4, 1), InputError);
    CHECK_THROWS_AS(g.add_edges(-1, 2, 1), InputError);
    CHECK_THROWS_AS(g.add_edges(0, 1, -2), InputError);

    Multigraph k = Multigraph::complete(2, 3);
    CHECK_THROWS_AS(k.add_edges(0, 1, 1), InputError);
}

TEST_CASE("for_each_pair is lexicographic and skips absent pairs") {
    Multigraph g(4);
    g.add_edges(1, 3, 1);
    g.add_edges(0, 2, 2);
    std::vector<std::pair<int, int>> seen;
    g.for_each_pair([&](int u, int v, std::int64_t) { seen.emplace_back(u, v); });
    REQUIRE(seen.size() == 2);
    CHECK(seen[0] == std::pair<int, int>{0, 2});
    CHECK(seen[1] == std::pair<int, int>{1, 3});
}

TEST_CASE("coverage accounting accepts exact decompositions only when exact") {
    const Multigraph g = Multigraph::complete(1, 3);
    std::vector<Star> stars;
    stars.push_back({0, {1, 2}});
    // Pair {1,2} uncovered: fine as a packing, not as a decomposition.
    CHECK(coverage_check(g, stars, false).ok);
    CHECK_FALSE(coverage_check(g, stars, true).ok);
    stars.push_back({1, {2}});
    CHECK(coverage_check(g, stars, true).ok);

    // Over capacity.
    stars.push_back({2, {0}});
    const CoverageReport over = coverage_check(g, stars, false);
    CHECK_FALSE(over.ok);
    CHECK(over.covered > over.mu);
}

TEST_CASE("coverage accounting rejects structural breakage") {
    const Multigraph g = Multigraph::complete(2, 4);
    CHECK_THROWS_AS(coverage_check(g, {{0, {1, 1}}}, false), InputError);  // repeated leaf
    CHECK_THROWS_AS(coverage_check(g, {{0, {0, 2}}}, false), InputError);  // centre as leaf
    CHECK_THROWS_AS(coverage_check(g, {{0, {1, 4}}}, false), InputError);  // leaf range
    CHECK_THROWS_AS(coverage_check(g, {{5, {1, 2}}}, false), InputError);  // centre range
    CHECK_THROWS_AS(coverage_check(g, {{0, {}}}, false), InputError);      // empty star
}
