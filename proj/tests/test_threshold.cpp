#include <doctest.h>

#include <cmath>
#include <random>

#include "stardec/errors.hpp"
#include "stardec/rand.hpp"
#include "stardec/threshold.hpp"

using namespace stardec;

TEST_CASE("ell splits lambda by parity") {
    CHECK(ell_of(2) == 1);
    CHECK(ell_of(3) == 1);
    CHECK(ell_of(4) == 2);
    CHECK(ell_of(5) == 2);
    CHECK(ell_of(11) == 5);
    CHECK_THROWS_AS(ell_of(1), InputError);
}

TEST_CASE("guaranteed bound, odd lambda") {
    CHECK(max_star_bound(3, 162) == 121);
    CHECK(max_star_bound(5, 11) == 8);
    CHECK(max_star_bound(3, 2) == 1);
    CHECK(max_star_bound(3, 1) == 0);
    CHECK(max_star_bound(7, 100) == (7 * 99 + 1) / 8);
}

TEST_CASE("guaranteed bound, even lambda") {
    CHECK(even_size_within(4, 100, 90));
    CHECK_FALSE(even_size_within(4, 100, 91));
    CHECK(max_star_bound(4, 100) == 90);
    CHECK(max_star_bound(2, 6) == 4);
    CHECK(max_star_bound(2, 10) == 7);
    CHECK(max_star_bound(2, 2) == 0);
    CHECK(max_star_bound(4, 2) == 0);

    // The exact comparator is the bound's definition: everything at or below
    // passes, one above fails.
    for (std::int64_t lambda = 2; lambda <= 12; lambda += 2) {
        for (std::int64_t n : {1, 2, 3, 5, 17, 100, 999, 65536, 1000000}) {
            const std::int64_t b = max_star_bound(lambda, n);
            CHECK(b >= 0);
            CHECK(b <= n - 1);
            if (b > 0) CHECK(even_size_within(lambda, n, b));
            CHECK_FALSE(even_size_within(lambda, n, b + 1));
        }
    }
}

TEST_CASE("even comparator matches extended-precision evaluation") {
    const long double root2 = std::sqrt(2.0L);
    for (std::int64_t lambda = 2; lambda <= 20; lambda += 2) {
        const long double alpha =
            1.0L - (2.0L / static_cast<long double>(lambda)) * (3.0L - 2.0L * root2);
        std::mt19937_64 rng(substream_seed(0x7A3Dull, static_cast<std::uint64_t>(lambda)));
        for (int rep = 0; rep < 2000; ++rep) {
            const std::int64_t n =
                1 + static_cast<std::int64_t>(bounded_rand(rng, 1000000));
            const long double edge = alpha * static_cast<long double>(n - 1);
            const std::int64_t near = static_cast<std::int64_t>(std::floor(edge));
            for (std::int64_t m :
                 {near - 1, near, near + 1,
                  static_cast<std::int64_t>(bounded_rand(rng, static_cast<std::uint64_t>(n)))}) {
                if (m < 0) continue;
                CHECK(even_size_within(lambda, n, m) ==
                      (static_cast<long double>(m) <= edge));
            }
        }
    }
}

TEST_CASE("threshold descriptions") {
    const ThresholdInfo odd = alpha_prime(3);
    CHECK(odd.odd);
    CHECK(odd.num == 3);
    CHECK(odd.den == 4);
    CHECK(odd.approx == doctest::Approx(0.75));
    CHECK(odd.description == "3/4");

    const ThresholdInfo even = alpha_prime(4);
    CHECK_FALSE(even.odd);
    CHECK(even.approx == doctest::Approx(0.9142135624).epsilon(1e-9));
    CHECK_FALSE(even.description.empty());

    CHECK_THROWS_AS(alpha_prime(1), InputError);
}

TEST_CASE("comparator input guards") {
    CHECK_THROWS_AS(even_size_within(3, 10, 1), InputError);
    CHECK_THROWS_AS(even_size_within(2, 0, 1), InputError);
    CHECK_THROWS_AS(even_size_within(2, 5, -1), InputError);
    CHECK_THROWS_AS(max_star_bound(1, 5), InputError);
    CHECK_THROWS_AS(max_star_bound(2, 0), InputError);
}
