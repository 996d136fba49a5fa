#include "stardec/oracle.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "stardec/errors.hpp"

namespace stardec {

namespace {

// Leaf-set backtracker shared by oracle_pack and oracle_decompose. Capacity
// is tracked per pair; two identical stars at one centre must pick
// lexicographically non-decreasing leaf sets, which kills the permutation
// symmetry between them.
struct LeafSearch {
    int n = 0;
    std::vector<std::pair<int, std::int64_t>> stars;  // (centre, size), fixed order
    std::vector<std::vector<std::int64_t>> cap;       // remaining mu per pair
    std::vector<Star> chosen;

    bool solve() {
        // next_star hands out pointers into chosen; reserving up front keeps
        // push_back from reallocating underneath them.
        chosen.reserve(stars.size());
        return next_star(0);
    }

    bool next_star(std::size_t i) {
        if (i == stars.size()) return true;
        const auto [u, s] = stars[i];
        if (s > n - 1) return false;  // a simple star cannot repeat a leaf
        const std::vector<int>* prev =
            (i > 0 && stars[i - 1] == stars[i]) ? &chosen[i - 1].leaves : nullptr;
        std::vector<int> leaves;
        leaves.reserve(static_cast<std::size_t>(s));
        return grow(i, u, s, 0, leaves, prev != nullptr, prev);
    }

    bool grow(std::size_t i, int u, std::int64_t s, int from, std::vector<int>& leaves,
              bool tight, const std::vector<int>* prev) {
        if (static_cast<std::int64_t>(leaves.size()) == s) {
            for (int w : leaves) {
                --pair_cap(u, w);
                --pair_cap(w, u);
            }
            chosen.push_back({u, leaves});
            if (next_star(i + 1)) return true;
            chosen.pop_back();
            for (int w : leaves) {
                ++pair_cap(u, w);
                ++pair_cap(w, u);
            }
            return false;
        }
        int lo = from;
        if (tight) lo = std::max(lo, (*prev)[leaves.size()]);
        // Not enough candidate vertices left for the remaining leaves.
        if (n - lo < s - static_cast<std::int64_t>(leaves.size())) return false;
        for (int w = lo; w < n; ++w) {
            if (w == u || pair_cap(u, w) <= 0) continue;
            leaves.push_back(w);
            const bool still_tight = tight && w == (*prev)[leaves.size() - 1];
            if (grow(i, u, s, w + 1, leaves, still_tight, prev)) return true;
            leaves.pop_back();
        }
        return false;
    }

    std::int64_t& pair_cap(int u, int w) {
        return cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)];
    }
};

LeafSearch make_leaf_search(const Multigraph& g) {
    LeafSearch ls;
    ls.n = g.n();
    ls.cap.assign(static_cast<std::size_t>(ls.n),
                  std::vector<std::int64_t>(static_cast<std::size_t>(ls.n), 0));
    for (int u = 0; u < ls.n; ++u)
        for (int v = 0; v < ls.n; ++v)
            if (u != v) ls.cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = g.mu(u, v);
    return ls;
}

}  // namespace

OracleAnswer oracle_pack(const Multigraph& g, const CenterSpec& spec, const OracleCaps& caps) {
    if (spec.centers.size() != static_cast<std::size_t>(g.n()))
        throw InputError("spec must prescribe a multiset for every vertex");
    if (g.n() > caps.max_vertices)
        throw CapError("pack oracle capped at " + std::to_string(caps.max_vertices) +
                       " vertices, got " + std::to_string(g.n()));
    if (spec.total_size() > caps.max_total_size)
        throw CapError("pack oracle capped at total size " +
                       std::to_string(caps.max_total_size) + ", got " +
                       std::to_string(spec.total_size()));
    std::int64_t mu_max = 0;
    g.for_each_pair([&](int, int, std::int64_t mult) { mu_max = std::max(mu_max, mult); });
    if (mu_max > caps.max_multiplicity)
        throw CapError("pack oracle capped at multiplicity " +
                       std::to_string(caps.max_multiplicity) + ", got " +
                       std::to_string(mu_max));

    LeafSearch ls = make_leaf_search(g);
    for (int v = 0; v < g.n(); ++v)
        for (const auto& [size, mult] : spec.centers[static_cast<std::size_t>(v)].runs())
            for (std::int64_t i = 0; i < mult; ++i) ls.stars.emplace_back(v, size);

    OracleAnswer ans;
    ans.feasible = ls.solve();
    if (ans.feasible) ans.stars = std::move(ls.chosen);
    return ans;
}

FEnumResult oracle_pack_fenum(const Multigraph& g, const CenterSpec& spec,
                              std::int64_t max_functions) {
    const int n = g.n();
    if (spec.centers.size() != static_cast<std::size_t>(n))
        throw InputError("spec must prescribe a multiset for every vertex");

    __int128 count = 1;
    for (const IntMultiset& mv : spec.centers) {
        count *= mv.size() + 1;
        if (count > max_functions)
            throw CapError("restriction-function space exceeds " +
                           std::to_string(max_functions));
    }

    // Top-i sums per vertex, straight from the definition.
    std::vector<std::vector<std::int64_t>> top(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::vector<std::int64_t> sizes = spec.centers[static_cast<std::size_t>(v)].expanded();
        std::vector<std::int64_t> pre{0};
        for (std::int64_t s : sizes) pre.push_back(pre.back() + s);
        top[static_cast<std::size_t>(v)] = std::move(pre);
    }
    std::vector<std::pair<std::pair<int, int>, std::int64_t>> pairs;
    g.for_each_pair([&](int u, int v, std::int64_t mult) { pairs.push_back({{u, v}, mult}); });

    std::vector<std::int64_t> f(static_cast<std::size_t>(n), 0);
    FEnumResult best;
    bool first = true;
    while (true) {
        std::int64_t minus = 0;
        for (int v = 0; v < n; ++v)
            minus += top[static_cast<std::size_t>(v)][static_cast<std::size_t>(f[static_cast<std::size_t>(v)])];
        std::int64_t plus = 0;
        for (const auto& [uv, mult] : pairs)
            plus += std::min(f[static_cast<std::size_t>(uv.first)] + f[static_cast<std::size_t>(uv.second)], mult);
        const std::int64_t delta = plus - minus;
        if (first || delta < best.min_delta) {
            best.min_delta = delta;
            best.argmin.f = f;
            first = false;
        }
        // Odometer step over the product of {0..|M_v|}.
        int v = 0;
        while (v < n && f[static_cast<std::size_t>(v)] ==
                            spec.centers[static_cast<std::size_t>(v)].size()) {
            f[static_cast<std::size_t>(v)] = 0;
            ++v;
        }
        if (v == n) break;
        ++f[static_cast<std::size_t>(v)];
    }
    return best;
}

OracleAnswer oracle_decompose(const DecompInstance& inst, const OracleCaps& caps) {
    inst.validate();
    if (inst.n > caps.max_vertices)
        throw CapError("decompose oracle capped at " + std::to_string(caps.max_vertices) +
                       " vertices, got " + std::to_string(inst.n));
    if (inst.sizes.sum() > caps.max_total_size)
        throw CapError("decompose oracle capped at total size " +
                       std::to_string(caps.max_total_size) + ", got " +
                       std::to_string(inst.sizes.sum()));

    const int n = inst.n;
    const Multigraph host = Multigraph::complete(inst.lambda, n);
    const std::vector<std::int64_t> items = inst.sizes.expanded();  // descending
    const std::int64_t degree = inst.lambda * (n - 1);

    std::vector<std::int64_t> sums(static_cast<std::size_t>(n), 0);
    std::vector<int> where(items.size(), 0);
    OracleAnswer ans;

    // Assign sizes to centres, equal sizes in non-decreasing vertex order,
    // then hand each complete assignment to the leaf backtracker.
    std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
        if (i == items.size()) {
            LeafSearch ls = make_leaf_search(host);
            for (std::size_t j = 0; j < items.size(); ++j)
                ls.stars.emplace_back(where[j], items[j]);
            std::stable_sort(ls.stars.begin(), ls.stars.end(),
                             [](const auto& lhs, const auto& rhs) {
                                 return lhs.first != rhs.first ? lhs.first < rhs.first
                                                               : lhs.second > rhs.second;
                             });
            if (!ls.solve()) return false;
            ans.stars = std::move(ls.chosen);
            return true;
        }
        const int lo = (i > 0 && items[i] == items[i - 1]) ? where[i - 1] : 0;
        for (int v = lo; v < n; ++v) {
            if (sums[static_cast<std::size_t>(v)] + items[i] > degree) continue;
            where[i] = v;
            sums[static_cast<std::size_t>(v)] += items[i];
            if (assign(i + 1)) return true;
            sums[static_cast<std::size_t>(v)] -= items[i];
        }
        return false;
    };

    ans.feasible = assign(0);
    return ans;
}

bool oracle_tournament(const TournamentSpec& spec, const OracleCaps& caps) {
    spec.validate();
    const int n = spec.n();
    __int128 count = 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) {
        count *= spec.lambda + 1;
        if (count > caps.max_orientations)
            throw CapError("tournament oracle capped at " +
                           std::to_string(caps.max_orientations) + " orientations");
    }

    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<std::int64_t> deg(static_cast<std::size_t>(n), 0);
    std::vector<std::int64_t> distinct(static_cast<std::size_t>(n), 0);
    std::vector<int> open(static_cast<std::size_t>(n), 0);  // undecided pairs per vertex
    for (auto [u, v] : pairs) {
        ++open[static_cast<std::size_t>(u)];
        ++open[static_cast<std::size_t>(v)];
    }

    auto vertex_ok = [&](int v) {
        const auto vi = static_cast<std::size_t>(v);
        if (deg[vi] > spec.a[vi]) return false;
        if (deg[vi] + spec.lambda * open[vi] < spec.a[vi]) return false;
        if (distinct[vi] + open[vi] < spec.b[vi]) return false;
        if (open[vi] == 0 && deg[vi] != spec.a[vi]) return false;
        return true;
    };

    std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
        if (i == pairs.size()) return true;
        const auto [u, v] = pairs[i];
        const auto ui = static_cast<std::size_t>(u), vi = static_cast<std::size_t>(v);
        --open[ui];
        --open[vi];
        for (std::int64_t t = 0; t <= spec.lambda; ++t) {
            deg[ui] += t;
            deg[vi] += spec.lambda - t;
            distinct[ui] += t > 0 ? 1 : 0;
            distinct[vi] += t < spec.lambda ? 1 : 0;
            if (vertex_ok(u) && vertex_ok(v) && place(i + 1)) return true;
            distinct[ui] -= t > 0 ? 1 : 0;
            distinct[vi] -= t < spec.lambda ? 1 : 0;
            deg[ui] -= t;
            deg[vi] -= spec.lambda - t;
        }
        ++open[ui];
        ++open[vi];
        return false;
    };

    return place(0);
}

}  // namespace stardec
