#include <doctest.h>

#include "stardec/errors.hpp"
#include "stardec/multiset.hpp"

using stardec::InputError;
using stardec::IntMultiset;

TEST_CASE("multiset basics") {
    IntMultiset m({5, 9, 5, 1});
    CHECK(m.size() == 4);
    CHECK(m.sum() == 20);
    CHECK(m.max() == 9);
    CHECK(m.min() == 1);
    CHECK(m.multiplicity(5) == 2);
    CHECK(m.multiplicity(7) == 0);

    const auto flat = m.expanded();
    REQUIRE(flat.size() == 4);
    CHECK(flat == std::vector<std::int64_t>{9, 5, 5, 1});

    // Runs iterate in descending value order.
    auto it = m.runs().begin();
    CHECK(it->first == 9);
    ++it;
    CHECK(it->first == 5);
    CHECK(it->second == 2);
}

TEST_CASE("top-i prefix sums") {
    IntMultiset m({4, 4, 2, 1});
    CHECK(m.sum_top(0) == 0);
    CHECK(m.sum_top(1) == 4);
    CHECK(m.sum_top(2) == 8);
    CHECK(m.sum_top(3) == 10);
    CHECK(m.sum_top(4) == 11);
    CHECK_THROWS_AS(m.sum_top(5), InputError);
    CHECK_THROWS_AS(m.sum_top(-1), InputError);
}

TEST_CASE("add and remove guard their inputs") {
    IntMultiset m;
    CHECK_THROWS_AS(m.add(0), InputError);
    CHECK_THROWS_AS(m.add(-3), InputError);
    CHECK_THROWS_AS(m.add(5, 0), InputError);
    m.add(5, 2);
    CHECK_THROWS_AS(m.remove(5, 3), InputError);
    CHECK_THROWS_AS(m.remove(4, 1), InputError);
    m.remove(5, 2);
    CHECK(m.empty());
    CHECK_THROWS_AS(m.max(), InputError);
    CHECK_THROWS_AS(m.min(), InputError);

    // The running sum is capped, so degenerate inputs cannot overflow later
    // arithmetic.
    IntMultiset big;
    const std::int64_t huge = (std::int64_t{1} << 62) - 1;
    big.add(huge, 1);
    CHECK_THROWS_AS(big.add(huge, 1), InputError);
}

TEST_CASE("plus and minus are per-value") {
    IntMultiset a({3, 3, 1});
    IntMultiset b({3, 2});
    const IntMultiset u = a.plus(b);
    CHECK(u.size() == 5);
    CHECK(u.multiplicity(3) == 3);
    const IntMultiset d = a.minus(b);
    CHECK(d.size() == 2);
    CHECK(d.multiplicity(3) == 1);
    CHECK(d.multiplicity(1) == 1);
    CHECK(d.multiplicity(2) == 0);  // saturating: removing what is absent is a no-op
    CHECK(a == IntMultiset({1, 3, 3}));
}
