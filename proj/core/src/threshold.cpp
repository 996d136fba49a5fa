#include "stardec/threshold.hpp"

#include <cmath>

#include "stardec/errors.hpp"

namespace stardec {

ThresholdInfo alpha_prime(std::int64_t lambda) {
    if (lambda < 2)
        throw InputError("threshold defined for lambda >= 2 (lambda=1 has its own theory)");
    ThresholdInfo info;
    info.lambda = lambda;
    info.odd = lambda % 2 != 0;
    if (info.odd) {
        info.num = lambda;
        info.den = lambda + 1;
        info.approx = static_cast<double>(lambda) / static_cast<double>(lambda + 1);
        info.description =
            std::to_string(lambda) + "/" + std::to_string(lambda + 1);
    } else {
        info.approx = 1.0 - (2.0 / static_cast<double>(lambda)) * (3.0 - 2.0 * std::sqrt(2.0));
        info.description = "1 - (6 - 4*sqrt(2))/" + std::to_string(lambda);
    }
    return info;
}

bool even_size_within(std::int64_t lambda, std::int64_t n, std::int64_t m) {
    if (lambda < 2 || lambda % 2 != 0) throw InputError("even_size_within needs even lambda >= 2");
    if (n < 1 || m < 0) throw InputError("even_size_within needs n >= 1, m >= 0");
    // m <= (n-1) - (n-1)(6-4sqrt2)/lambda
    //   <=> lambda(n-1) - lambda m - 6(n-1) >= -4 sqrt(2) (n-1).
    // With D the left side: D >= 0 settles it; otherwise compare squares.
    // Equality D^2 == 32(n-1)^2 would make sqrt(2) rational, so no tie-break
    // rule is needed (n=1 gives D=0, caught by the first branch).
    const std::int64_t d = lambda * (n - 1) - lambda * m - 6 * (n - 1);
    if (d >= 0) return true;
    const __int128 lhs = static_cast<__int128>(d) * d;
    const __int128 rhs = static_cast<__int128>(32) * (n - 1) * (n - 1);
    return lhs <= rhs;
}

std::int64_t max_star_bound(std::int64_t lambda, std::int64_t n) {
    if (lambda < 2) throw InputError("max_star_bound needs lambda >= 2");
    if (n < 1) throw InputError("max_star_bound needs n >= 1");
    if (lambda % 2 != 0) return (lambda * (n - 1) + 1) / (lambda + 1);
    // Largest m passing the exact comparator; seed from a float estimate and
    // correct with the exact test so the boundary cannot be off by one.
    double alpha = 1.0 - (2.0 / static_cast<double>(lambda)) * (3.0 - 2.0 * std::sqrt(2.0));
    std::int64_t m = static_cast<std::int64_t>(alpha * static_cast<double>(n - 1)) + 2;
    while (m > 0 && !even_size_within(lambda, n, m)) --m;
    while (even_size_within(lambda, n, m + 1)) ++m;
    return m;
}

std::int64_t ell_of(std::int64_t lambda) {
    if (lambda < 2) throw InputError("ell_of needs lambda >= 2");
    return lambda % 2 == 0 ? lambda / 2 : (lambda - 1) / 2;
}

}  // namespace stardec
