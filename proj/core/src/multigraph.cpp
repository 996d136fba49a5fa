#include "stardec/multigraph.hpp"

#include <algorithm>

#include "stardec/errors.hpp"

namespace stardec {

Multigraph::Multigraph(std::int64_t n) : n_(n) {
    if (n < 1) throw InputError("multigraph needs n >= 1, got " + std::to_string(n));
    if (n > (std::int64_t{1} << 31)) throw InputError("vertex count too large");
}

Multigraph Multigraph::complete(std::int64_t lambda, std::int64_t n) {
    Multigraph g(n);
    if (lambda < 1) throw InputError("complete multigraph needs lambda >= 1");
    g.complete_ = true;
    g.lambda_ = lambda;
    return g;
}

void Multigraph::add_edges(int u, int v, std::int64_t mult) {
    if (complete_) throw InputError("cannot add edges to a complete-multigraph view");
    if (u == v) throw InputError("loops are not allowed (vertex " + std::to_string(u) + ")");
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw InputError("edge endpoint out of range: (" + std::to_string(u) + "," +
                         std::to_string(v) + ") with n=" + std::to_string(n_));
    if (mult < 0) throw InputError("edge multiplicity must be >= 0");
    if (mult == 0) return;
    mu_[{std::min(u, v), std::max(u, v)}] += mult;
}

std::int64_t Multigraph::mu(int u, int v) const {
    if (u == v) return 0;
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return 0;
    if (complete_) return lambda_;
    auto it = mu_.find({std::min(u, v), std::max(u, v)});
    return it == mu_.end() ? 0 : it->second;
}

std::int64_t Multigraph::edge_total() const {
    if (complete_) return lambda_ * (n_ * (n_ - 1) / 2);
    std::int64_t total = 0;
    for (const auto& [pair, mult] : mu_) total += mult;
    return total;
}

namespace {

// Triangular index for the pair (u,v), u < v, over n vertices.
inline std::size_t pair_index(int u, int v, std::int64_t n) {
    return static_cast<std::size_t>(u) * (2 * n - u - 1) / 2 + (v - u - 1);
}

}  // namespace

CoverageReport coverage_check(const Multigraph& g, const std::vector<Star>& stars, bool exact) {
    CoverageReport rep;
    const std::int64_t n = g.n();
    for (const auto& star : stars) {
        if (star.center < 0 || star.center >= n) throw InputError("star center out of range");
        if (star.leaves.empty()) throw InputError("star must have at least one leaf");
        std::vector<int> sorted = star.leaves;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i] < 0 || sorted[i] >= n) throw InputError("star leaf out of range");
            if (sorted[i] == star.center) throw InputError("star center appears among its leaves");
            if (i > 0 && sorted[i] == sorted[i - 1]) throw InputError("star has a repeated leaf");
        }
    }

    // Flat triangular counters while they fit comfortably; map fallback above.
    const bool flat = n <= 1500;
    std::vector<std::int64_t> cover_flat;
    std::map<std::pair<int, int>, std::int64_t> cover_map;
    if (flat) cover_flat.assign(static_cast<std::size_t>(n * (n - 1) / 2), 0);

    auto bump = [&](int a, int b) {
        int u = std::min(a, b), v = std::max(a, b);
        if (flat)
            ++cover_flat[pair_index(u, v, n)];
        else
            ++cover_map[{u, v}];
    };
    for (const auto& star : stars)
        for (int leaf : star.leaves) bump(star.center, leaf);

    auto covered_of = [&](int u, int v) -> std::int64_t {
        if (flat) return cover_flat[pair_index(u, v, n)];
        auto it = cover_map.find({u, v});
        return it == cover_map.end() ? 0 : it->second;
    };

    auto fail = [&](int u, int v, std::int64_t got, std::int64_t cap) {
        rep.ok = false;
        rep.u = u;
        rep.v = v;
        rep.covered = got;
        rep.mu = cap;
        rep.message = "pair {" + std::to_string(u) + "," + std::to_string(v) + "} covered " +
                      std::to_string(got) + (exact ? " != " : " > ") + std::to_string(cap);
    };

    if (exact) {
        // Every pair, present or not, must match mu exactly.
        for (int u = 0; u + 1 < n && rep.ok; ++u)
            for (int v = u + 1; v < n; ++v) {
                std::int64_t got = covered_of(u, v), cap = g.mu(u, v);
                if (got != cap) {
                    fail(u, v, got, cap);
                    break;
                }
            }
    } else {
        if (flat) {
            for (int u = 0; u + 1 < n && rep.ok; ++u)
                for (int v = u + 1; v < n; ++v) {
                    std::int64_t got = cover_flat[pair_index(u, v, n)];
                    if (got > g.mu(u, v)) {
                        fail(u, v, got, g.mu(u, v));
                        break;
                    }
                }
        } else {
            for (const auto& [pair, got] : cover_map) {
                if (got > g.mu(pair.first, pair.second)) {
                    fail(pair.first, pair.second, got, g.mu(pair.first, pair.second));
                    break;
                }
            }
        }
    }
    return rep;
}

}  // namespace stardec
