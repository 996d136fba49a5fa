#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace stardec {

// Unbiased draw from [0, n). Rejection sampling on the raw mt19937_64 stream;
// std::uniform_int_distribution is implementation-defined, so using it would
// break the promise that equal seeds give equal outputs everywhere.
inline std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t threshold = (std::numeric_limits<std::uint64_t>::max() / n) * n;
    std::uint64_t r = rng();
    while (r >= threshold) r = rng();
    return r % n;
}

// Fisher-Yates with bounded_rand, for the same reproducibility reason
// (std::shuffle's draw sequence is unspecified by the standard).
template <class T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(bounded_rand(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

// Seed r for an independent stream k derived from a base seed (splitmix64
// step). Lets parallel or indexed work draw reproducibly regardless of the
// order in which the streams are consumed.
inline std::uint64_t substream_seed(std::uint64_t base, std::uint64_t k) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (k + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace stardec
