#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace stardec {

// Loopless multigraph on dense vertex ids 0..n-1. Two backings share one
// interface: an explicit (min,max) pair -> multiplicity map, or a constant-mu
// view for complete multigraphs (which would otherwise cost O(n^2) memory for
// no information). Both answer mu() identically.
class Multigraph {
  public:
    explicit Multigraph(std::int64_t n);
    static Multigraph complete(std::int64_t lambda, std::int64_t n);

    // Explicit-backing builder; rejects loops, out-of-range ids, negative
    // multiplicities, and use on a complete view.
    void add_edges(int u, int v, std::int64_t mult);

    std::int64_t n() const { return n_; }
    std::int64_t mu(int u, int v) const;
    bool is_complete() const { return complete_; }
    std::int64_t lambda() const { return lambda_; }
    std::int64_t edge_total() const;

    // Visits pairs with mu > 0 in lexicographic (u,v), u < v, order.
    template <typename F>
    void for_each_pair(F&& fn) const {
        if (complete_) {
            for (int u = 0; u + 1 < n_; ++u)
                for (int v = u + 1; v < n_; ++v) fn(u, v, lambda_);
        } else {
            for (const auto& [pair, mult] : mu_) fn(pair.first, pair.second, mult);
        }
    }

  private:
    std::int64_t n_ = 0;
    bool complete_ = false;
    std::int64_t lambda_ = 0;
    std::map<std::pair<int, int>, std::int64_t> mu_;
};

struct Star {
    int center = 0;
    std::vector<int> leaves;  // distinct, center excluded; kept sorted

    std::int64_t size() const { return static_cast<std::int64_t>(leaves.size()); }
};

struct CoverageReport {
    bool ok = true;
    int u = -1, v = -1;               // first violating pair when !ok
    std::int64_t covered = 0, mu = 0;  // its coverage vs capacity
    std::string message;
};

// Per-pair coverage accounting of stars against g. exact=true demands equality
// with mu everywhere, otherwise <=. Also rejects structural breakage: repeated
// leaves, center among leaves, out-of-range ids.
CoverageReport coverage_check(const Multigraph& g, const std::vector<Star>& stars, bool exact);

}  // namespace stardec
