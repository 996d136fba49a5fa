#pragma once

#include <cstdint>
#include <string>

namespace stardec {

// Largest star size for which the constructive decomposer is guaranteed to
// succeed on n vertices:
//   odd lambda:  floor((lambda(n-1)+1)/(lambda+1))
//   even lambda: floor(alpha'(n-1)) with alpha' = 1 - (2/lambda)(3-2*sqrt(2))
// Above this bound the decision problem turns NP-complete, so the boundary is
// computed exactly, never through floating point.
struct ThresholdInfo {
    std::int64_t lambda = 0;
    bool odd = false;
    // odd case: the threshold fraction num/den == lambda/(lambda+1)
    std::int64_t num = 0;
    std::int64_t den = 0;
    double approx = 0.0;       // decimal approximation of alpha'
    std::string description;   // human-readable exact form
};

ThresholdInfo alpha_prime(std::int64_t lambda);  // lambda >= 2

// Exact integer test of m <= alpha'(n-1) for even lambda. Works by sign
// analysis plus one squaring; sqrt(2) never materializes. Requires
// lambda even >= 2, n >= 1, m >= 0.
bool even_size_within(std::int64_t lambda, std::int64_t n, std::int64_t m);

// The guaranteed bound described above, for either parity.
std::int64_t max_star_bound(std::int64_t lambda, std::int64_t n);

// (lambda-1)/2 for odd lambda, lambda/2 for even.
std::int64_t ell_of(std::int64_t lambda);

}  // namespace stardec
