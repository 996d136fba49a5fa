#include "stardec/tournament.hpp"

#include <algorithm>
#include <functional>

#include "stardec/errors.hpp"
#include "stardec/multigraph.hpp"

namespace stardec {

void TournamentSpec::validate() const {
    if (lambda < 1) throw InputError("lambda must be >= 1");
    if (a.empty()) throw InputError("tournament spec needs at least one vertex");
    if (a.size() != b.size()) throw InputError("a and b must have the same length");
    for (std::size_t v = 0; v < a.size(); ++v) {
        if (b[v] < 0 || a[v] < b[v])
            throw InputError("need a(v) >= b(v) >= 0 at vertex " + std::to_string(v));
    }
    const int nn = n();
    const __int128 total = static_cast<__int128>(lambda) * nn * (nn - 1) / 2;
    __int128 asum = 0;
    for (std::int64_t av : a) asum += av;
    if (asum != total)
        throw InputError("out-degrees must total lambda*C(n,2); no orientation of the "
                         "complete multigraph has any other sum");
}

TournamentVerdict tournament_feasible(const TournamentSpec& spec) {
    spec.validate();
    const int n = spec.n();
    std::vector<std::int64_t> vals(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        std::int64_t bsum = 0;
        for (int v = 0; v < n; ++v) {
            const std::int64_t bk =
                std::max<std::int64_t>(0, spec.b[static_cast<std::size_t>(v)] - n + k + 1);
            bsum += bk;
            vals[static_cast<std::size_t>(v)] = spec.a[static_cast<std::size_t>(v)] - bk;
        }
        // b_k depends on k, so the demands must be re-sorted every round.
        std::sort(vals.begin(), vals.end(), std::greater<>());
        std::int64_t psi = 0;
        for (int i = 0; i < k; ++i) psi += vals[static_cast<std::size_t>(i)];
        const __int128 rhs = static_cast<__int128>(spec.lambda) * k * (2 * n - k - 1) / 2;
        // When violated, rhs < lhs <= sum(a), so narrowing back is safe.
        if (psi + bsum > rhs)
            return {false, k, psi + bsum, static_cast<std::int64_t>(rhs)};
    }
    return {true, -1, 0, 0};
}

RealizeResult realize_tournament(const TournamentSpec& spec) {
    spec.validate();
    const int n = spec.n();
    RealizeResult res;

    CenterSpec cs;
    cs.centers.assign(static_cast<std::size_t>(n), IntMultiset{});
    for (int v = 0; v < n; ++v) {
        const std::int64_t av = spec.a[static_cast<std::size_t>(v)];
        const std::int64_t bv = spec.b[static_cast<std::size_t>(v)];
        IntMultiset& mv = cs.centers[static_cast<std::size_t>(v)];
        // One b(v)-star pins b(v) distinct out-neighbours; 1-stars carry the
        // rest of the out-degree. b(v) <= 1 needs no dedicated star.
        if (bv >= 2) {
            mv.add(bv);
            if (av > bv) mv.add(1, av - bv);
        } else if (av > 0) {
            mv.add(1, av);
        }
    }

    const Multigraph host = Multigraph::complete(spec.lambda, n);
    PackResult pr = pack_with_centers(host, cs);
    if (!pr.feasible) {
        res.f = std::move(pr.f);
        res.report = pr.report;
        return res;
    }

    res.feasible = true;
    res.t.n = n;
    res.t.lambda = spec.lambda;
    res.t.out.assign(static_cast<std::size_t>(n),
                     std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    for (const Star& s : pr.stars)
        for (int leaf : s.leaves)
            ++res.t.out[static_cast<std::size_t>(s.center)][static_cast<std::size_t>(leaf)];
    return res;
}

bool verify_tournament(const TournamentSpec& spec, const Tournament& t, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const int n = spec.n();
    if (t.n != n || t.lambda != spec.lambda) return fail("tournament shape differs from spec");
    if (t.out.size() != static_cast<std::size_t>(n)) return fail("orientation matrix not n by n");
    for (int u = 0; u < n; ++u) {
        const auto& row = t.out[static_cast<std::size_t>(u)];
        if (row.size() != static_cast<std::size_t>(n)) return fail("orientation matrix not n by n");
        if (row[static_cast<std::size_t>(u)] != 0)
            return fail("vertex " + std::to_string(u) + " has self-oriented edges");
        for (std::int64_t x : row)
            if (x < 0) return fail("negative orientation count");
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const std::int64_t s = t.out[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] +
                                   t.out[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
            if (s != spec.lambda)
                return fail("pair (" + std::to_string(u) + "," + std::to_string(v) +
                            ") orients " + std::to_string(s) + " edges, want lambda");
        }
    for (int v = 0; v < n; ++v) {
        std::int64_t deg = 0, distinct = 0;
        for (int w = 0; w < n; ++w) {
            const std::int64_t x = t.out[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
            deg += x;
            if (x > 0) ++distinct;
        }
        if (deg != spec.a[static_cast<std::size_t>(v)])
            return fail("vertex " + std::to_string(v) + " has out-degree " + std::to_string(deg) +
                        ", want " + std::to_string(spec.a[static_cast<std::size_t>(v)]));
        if (distinct < spec.b[static_cast<std::size_t>(v)])
            return fail("vertex " + std::to_string(v) + " has " + std::to_string(distinct) +
                        " distinct out-neighbours, want at least " +
                        std::to_string(spec.b[static_cast<std::size_t>(v)]));
    }
    return true;
}

}  // namespace stardec
