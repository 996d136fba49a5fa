#include "stardec/hardness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "stardec/errors.hpp"
#include "stardec/multigraph.hpp"
#include "stardec/threshold.hpp"

namespace stardec {

namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::int64_t i = 3; i * i <= p; i += 2)
        if (p % i == 0) return false;
    return true;
}

std::vector<std::int64_t> divisors_of(std::int64_t n) {
    std::vector<std::int64_t> ds;
    for (std::int64_t i = 1; i * i <= n; ++i) {
        if (n % i) continue;
        ds.push_back(i);
        if (i != n / i) ds.push_back(n / i);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::int64_t int_sqrt(std::int64_t n) {
    if (n < 2) return n < 0 ? 0 : n;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// g = gcd(a,b) with x*a + y*b == g; a, b >= 0.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    std::int64_t x1 = 0, y1 = 0;
    const std::int64_t g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace

std::int64_t ThreePartition::a() const {
    std::int64_t total = 0;
    for (std::int64_t v : values) total += v;
    return total / q();
}

void ThreePartition::validate() const {
    if (values.size() < 3 || values.size() % 3 != 0)
        throw InputError("3-partition needs 3q values for some q >= 1");
    std::int64_t total = 0;
    for (std::int64_t v : values) {
        if (v < 1) throw InputError("3-partition values must be positive");
        total += v;
    }
    const std::int64_t qq = q();
    if (total % qq != 0)
        throw InputError("3-partition value total must be divisible by q");
    const std::int64_t aa = total / qq;
    for (std::int64_t v : values)
        if (!(4 * v > aa && 2 * v < aa))
            throw InputError("3-partition value " + std::to_string(v) +
                             " outside the open window (a/4, a/2) for a = " + std::to_string(aa));
}

namespace {

struct TriSearch {
    const std::vector<std::int64_t>& vals;  // descending
    std::int64_t a = 0;
    std::int64_t nodes_left = 0;
    std::vector<std::int64_t> sums;
    std::vector<int> counts;
    std::vector<std::vector<int>> members;  // positions in `vals`

    bool place(std::size_t i) {
        if (nodes_left-- <= 0)
            throw CapError("3-partition search exceeded its node budget");
        if (i == vals.size()) return true;
        // Classes with equal fill are interchangeable; try only the first.
        std::int64_t seen_sum = -1;
        int seen_cnt = -1;
        for (std::size_t j = 0; j < sums.size(); ++j) {
            if (counts[j] == 3) continue;
            if (sums[j] == seen_sum && counts[j] == seen_cnt) continue;
            const std::int64_t ns = sums[j] + vals[i];
            if (ns > a) continue;
            if (counts[j] == 2 && ns != a) continue;
            seen_sum = sums[j];
            seen_cnt = counts[j];
            sums[j] = ns;
            ++counts[j];
            members[j].push_back(static_cast<int>(i));
            if (place(i + 1)) return true;
            members[j].pop_back();
            --counts[j];
            sums[j] = ns - vals[i];
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<std::array<int, 3>>> solve_three_partition(const ThreePartition& tp,
                                                                     std::int64_t node_cap) {
    tp.validate();
    const std::int64_t q = tp.q();
    // Work on descending values, remembering original positions.
    std::vector<int> order(tp.values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return tp.values[static_cast<std::size_t>(i)] > tp.values[static_cast<std::size_t>(j)];
    });
    std::vector<std::int64_t> vals(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        vals[i] = tp.values[static_cast<std::size_t>(order[i])];

    TriSearch search{vals, tp.a(), node_cap};
    search.sums.assign(static_cast<std::size_t>(q), 0);
    search.counts.assign(static_cast<std::size_t>(q), 0);
    search.members.assign(static_cast<std::size_t>(q), {});
    if (!search.place(0)) return std::nullopt;

    std::vector<std::array<int, 3>> classes;
    classes.reserve(static_cast<std::size_t>(q));
    for (const auto& mem : search.members) {
        std::array<int, 3> tri{};
        for (int k = 0; k < 3; ++k) tri[static_cast<std::size_t>(k)] = order[static_cast<std::size_t>(mem[static_cast<std::size_t>(k)])];
        std::sort(tri.begin(), tri.end());
        classes.push_back(tri);
    }
    return classes;
}

DecompInstance HardOddParams::instance() const { return DecompInstance{lambda, static_cast<int>(n), M}; }
DecompInstance HardEvenParams::instance() const { return DecompInstance{lambda, static_cast<int>(n), M}; }

HardOddParams gen_hard_odd(std::int64_t lambda, const ThreePartition& tp) {
    if (lambda < 3 || lambda % 2 == 0)
        throw InputError("odd hard-instance generator needs odd lambda >= 3");
    tp.validate();

    HardOddParams par;
    par.lambda = lambda;
    par.ell = (lambda - 1) / 2;
    par.q = tp.q();
    par.a = tp.a();
    const std::int64_t ell = par.ell, q = par.q, a = par.a;

    // Smallest n above the size bound that makes m below an integer.
    const std::int64_t floor_n = 4 * (ell + 4) * (a + 1) * q;
    const std::int64_t mod = lambda + 1;
    std::int64_t n = floor_n + 1;
    n += ((q + 1) % mod - n % mod + mod) % mod;
    par.n = n;
    if ((lambda * (n - 1) + q) % mod != 0)
        throw InternalError("vertex count congruence failed to make the main size integral");
    par.m = (lambda * (n - 1) + q) / mod;

    // b is half-integral when q is even, so keep it doubled.
    par.b2 = 2 * ell * (n - par.m - 1) + (q - 1) - 2 * (ell + 1) * q * a;
    if (par.b2 < 2) throw InternalError("b-size must be positive");
    if (q % 2 == 1 && par.b2 % 2 != 0)
        throw InternalError("b must be an integer when q is odd");
    if (q % 2 == 0 && par.b2 % 2 == 0)
        throw InternalError("b must be half-odd when q is even");
    const std::int64_t fb = par.b2 / 2;
    const std::int64_t cb = (par.b2 + 1) / 2;
    const std::int64_t qa_term = (ell + 1) * q * a;

    // The two separation facts every downstream argument leans on
    // (doubled to stay in integers):
    //   m > ceil(b) + (ell+1)qa + (ell+1/2)(q-1)
    //   2*floor(b) > b + (ell+1)qa + (ell+1/2)(q-1)
    if (!(2 * par.m > 2 * cb + 2 * qa_term + (2 * ell + 1) * (q - 1)))
        throw InternalError("main size fails its separation bound");
    if (!(4 * fb > par.b2 + 2 * qa_term + (2 * ell + 1) * (q - 1)))
        throw InternalError("b-size fails its separation bound");

    if (q % 2 == 1) {
        par.B.add(fb, q);
    } else {
        par.B.add(cb, q / 2);
        par.B.add(fb, q / 2);
    }

    par.M = par.B;
    par.M.add(par.m, (ell + 1) * n - q);
    for (std::int64_t v : tp.values) par.M.add((ell + 1) * q * v);

    if (static_cast<__int128>(par.M.sum()) != static_cast<__int128>(lambda) * n * (n - 1) / 2)
        throw InternalError("generated sizes do not total the edge count");
    if (par.M.runs().rbegin()->first <= q)  // smallest element
        throw InternalError("generated instance has a size not exceeding q");
    if ((ell + 1) * q * *std::max_element(tp.values.begin(), tp.values.end()) > n - 1)
        throw InternalError("scaled partition value does not fit as a star size");
    return par;
}

EvenSearchOutcome gen_hard_even(std::int64_t lambda, const ThreePartition& tp,
                                std::int64_t search_limit) {
    if (lambda < 2 || lambda % 2 != 0)
        throw InputError("even hard-instance generator needs even lambda >= 2");
    tp.validate();

    const std::int64_t ell = lambda / 2;
    const std::int64_t q = tp.q();
    const std::int64_t a = tp.a();
    const std::int64_t qa_term = (ell + 1) * q * a;
    const std::int64_t max_val = *std::max_element(tp.values.begin(), tp.values.end());

    EvenSearchOutcome out;
    std::int64_t fail_cong = 0, fail_range = 0, fail_ineq = 0;

    auto exhausted = [&](std::int64_t n_now) {
        out.last_n = n_now - 1;
        out.note = "no parameters within " + std::to_string(search_limit) +
                   " checks (scanned n <= " + std::to_string(out.last_n) +
                   "; unsolvable congruences " + std::to_string(fail_cong) +
                   ", range misses " + std::to_string(fail_range) + ", inequality failures " +
                   std::to_string(fail_ineq) + ")";
        return out;
    };

    // (r, m, c, b, x, p) of the best candidate for the current n.
    using Cand = std::array<std::int64_t, 6>;

    for (std::int64_t n = q + 2;; ++n) {
        const std::int64_t np = n - q;
        std::optional<Cand> best;
        for (std::int64_t x : divisors_of(np)) {
            const std::int64_t y = np / x;
            // Smallest prime p with 2(px)^2 >= (n-1)^2, i.e. px >= (n-1)/sqrt(2).
            std::int64_t p = std::max<std::int64_t>(2, int_sqrt(((n - 1) * (n - 1) + 1) / 2) / x);
            while (2 * (p * x) * (p * x) < (n - 1) * (n - 1)) ++p;
            for (; p < y; ++p) {
                if (++out.work > search_limit) return exhausted(n);
                if (!is_prime(p)) continue;
                const std::int64_t r = p * x;
                if (r <= ell * q) {
                    ++fail_range;
                    continue;
                }
                const std::int64_t z = (ell + 1) * y - 2 * p;  // > 0 since p < y
                const std::int64_t big_a = ell * np * (np - 1) / x;
                const std::int64_t d = std::gcd(z, p);
                if (big_a % d != 0) {
                    ++fail_cong;
                    continue;
                }
                // Solve p * gamma == big_a (mod z) for gamma = m - q.
                const std::int64_t zz = z / d;
                std::int64_t gamma0 = 0, step = 1;
                if (zz > 1) {
                    std::int64_t inv = 0, tmp = 0;
                    const std::int64_t g = ext_gcd(((p / d) % zz + zz) % zz, zz, inv, tmp);
                    if (g != 1) throw InternalError("residual congruence must be coprime");
                    gamma0 = ((big_a / d) % zz) * ((inv % zz + zz) % zz) % zz;
                    step = zz;
                }
                for (std::int64_t gma = gamma0 > 0 ? gamma0 : step; gma < n - 1 - q;
                     gma += step) {
                    if (++out.work > search_limit) return exhausted(n);
                    const std::int64_t m = gma + q;
                    const std::int64_t num = big_a - p * gma;
                    if (num % z != 0) throw InternalError("congruence solution not integral");
                    const std::int64_t c = num / z + q;
                    const std::int64_t b =
                        (ell - 1) * (n - c - 1) + r + q - c - 1 - qa_term;
                    const std::int64_t c_count = (ell + 1) * n - 2 * r - q;
                    const bool ok = 2 * c > m + q && ell * (c - q) > (ell - 1) * (m - q) &&
                                    m > c + b + qa_term && b > qa_term + ell * (q - 1) &&
                                    c_count >= 0 && (ell + 1) * q * max_val <= n - 1 &&
                                    !even_size_within(lambda, n, m);
                    if (!ok) {
                        ++fail_ineq;
                        continue;
                    }
                    const __int128 sigma = static_cast<__int128>(m) * r +
                                           static_cast<__int128>(c) * c_count +
                                           static_cast<__int128>(b) * q +
                                           static_cast<__int128>(qa_term) * q;
                    if (sigma != static_cast<__int128>(lambda) * n * (n - 1) / 2)
                        throw InternalError("candidate sizes do not total the edge count");
                    const Cand cand{r, m, c, b, x, p};
                    if (!best || cand < *best) best = cand;
                    break;  // larger m for this (x, p) can never beat this one
                }
            }
        }
        if (best) {
            HardEvenParams par;
            par.lambda = lambda;
            par.ell = ell;
            par.q = q;
            par.a = a;
            par.n = n;
            par.r = (*best)[0];
            par.m = (*best)[1];
            par.c = (*best)[2];
            par.b = (*best)[3];
            par.x = (*best)[4];
            par.p = (*best)[5];
            par.M.add(par.m, par.r);
            const std::int64_t c_count = (ell + 1) * n - 2 * par.r - q;
            if (c_count > 0) par.M.add(par.c, c_count);
            par.M.add(par.b, q);
            for (std::int64_t v : tp.values) par.M.add((ell + 1) * q * v);
            if (par.M.runs().rbegin()->first <= q)
                throw InternalError("generated instance has a size not exceeding q");
            out.params = std::move(par);
            out.last_n = n;
            return out;
        }
    }
}

namespace {

// Cuts one packed star into consecutive runs of the requested sizes. Leaves
// are sorted first so the result is deterministic.
std::vector<Star> slice_star(const Star& s, const std::vector<std::int64_t>& pieces) {
    std::int64_t want = 0;
    for (std::int64_t p : pieces) want += p;
    if (want != s.size())
        throw InternalError("star of size " + std::to_string(s.size()) +
                            " cannot be cut into pieces totalling " + std::to_string(want));
    std::vector<int> leaves = s.leaves;
    std::sort(leaves.begin(), leaves.end());
    std::vector<Star> parts;
    parts.reserve(pieces.size());
    std::size_t at = 0;
    for (std::int64_t p : pieces) {
        Star piece;
        piece.center = s.center;
        piece.leaves.assign(leaves.begin() + static_cast<std::ptrdiff_t>(at),
                            leaves.begin() + static_cast<std::ptrdiff_t>(at + p));
        at += static_cast<std::size_t>(p);
        parts.push_back(std::move(piece));
    }
    return parts;
}

HardWitness finish_witness(const DecompInstance& inst, CenterSpec spec,
                           const std::vector<int>& special,  // vertices with an oversize star
                           const std::vector<std::vector<std::int64_t>>& piece_lists) {
    const Multigraph host = Multigraph::complete(inst.lambda, inst.n);
    PackResult pr = pack_with_centers(host, spec);
    if (!pr.feasible)
        throw InternalError("witness assignment failed to pack; the construction "
                            "guarantees it for a feasible source partition");

    std::vector<Star> stars;
    stars.reserve(pr.stars.size() + 4 * special.size());
    std::vector<char> is_special(static_cast<std::size_t>(inst.n), 0);
    for (int v : special) is_special[static_cast<std::size_t>(v)] = 1;

    for (Star& s : pr.stars) {
        if (!is_special[static_cast<std::size_t>(s.center)]) {
            stars.push_back(std::move(s));
            continue;
        }
        const std::size_t idx = static_cast<std::size_t>(
            std::find(special.begin(), special.end(), s.center) - special.begin());
        const auto& pieces = piece_lists[idx];
        std::int64_t merged = 0;
        for (std::int64_t p : pieces) merged += p;
        if (s.size() != merged) {
            stars.push_back(std::move(s));  // the regular stars at this vertex
            continue;
        }
        std::vector<Star> parts = slice_star(s, pieces);
        stars.insert(stars.end(), std::make_move_iterator(parts.begin()),
                     std::make_move_iterator(parts.end()));
    }

    std::string why;
    if (!verify_decomposition(inst, stars, &why))
        throw InternalError("witness decomposition failed verification: " + why);
    return {std::move(spec), std::move(stars)};
}

}  // namespace

HardWitness hard_odd_witness(const HardOddParams& par, const ThreePartition& tp) {
    tp.validate();
    auto classes = solve_three_partition(tp);
    if (!classes) throw InputError("witness requires a feasible 3-partition instance");

    const std::int64_t ell = par.ell, q = par.q, n = par.n;
    const std::int64_t qa_term = (ell + 1) * q * par.a;
    const std::int64_t fb = par.b2 / 2, cb = (par.b2 + 1) / 2;

    CenterSpec spec;
    spec.centers.assign(static_cast<std::size_t>(n), IntMultiset{});
    std::vector<int> special;
    std::vector<std::vector<std::int64_t>> pieces;
    for (std::int64_t v = 0; v < n - q; ++v)
        spec.centers[static_cast<std::size_t>(v)].add(par.m, ell + 1);
    for (std::int64_t j = 0; j < q; ++j) {
        const int v = static_cast<int>(n - q + j);
        // For even q the first half of the special vertices round b up.
        const std::int64_t bv = (q % 2 == 0 && j < q / 2) ? cb : fb;
        spec.centers[static_cast<std::size_t>(v)].add(par.m, ell);
        spec.centers[static_cast<std::size_t>(v)].add(bv + qa_term);
        special.push_back(v);
        std::vector<std::int64_t> ps{bv};
        for (int idx : (*classes)[static_cast<std::size_t>(j)])
            ps.push_back((ell + 1) * q * tp.values[static_cast<std::size_t>(idx)]);
        pieces.push_back(std::move(ps));
    }
    return finish_witness(par.instance(), std::move(spec), special, pieces);
}

HardWitness hard_even_witness(const HardEvenParams& par, const ThreePartition& tp) {
    tp.validate();
    auto classes = solve_three_partition(tp);
    if (!classes) throw InputError("witness requires a feasible 3-partition instance");

    const std::int64_t ell = par.ell, q = par.q, n = par.n, r = par.r;
    const std::int64_t qa_term = (ell + 1) * q * par.a;

    CenterSpec spec;
    spec.centers.assign(static_cast<std::size_t>(n), IntMultiset{});
    std::vector<int> special;
    std::vector<std::vector<std::int64_t>> pieces;
    for (std::int64_t v = 0; v < n - r - q; ++v)
        spec.centers[static_cast<std::size_t>(v)].add(par.c, ell + 1);
    for (std::int64_t v = n - r - q; v < n - q; ++v) {
        spec.centers[static_cast<std::size_t>(v)].add(par.m);
        if (ell > 1) spec.centers[static_cast<std::size_t>(v)].add(par.c, ell - 1);
    }
    for (std::int64_t j = 0; j < q; ++j) {
        const int v = static_cast<int>(n - q + j);
        if (ell > 1) spec.centers[static_cast<std::size_t>(v)].add(par.c, ell - 1);
        spec.centers[static_cast<std::size_t>(v)].add(par.c + par.b + qa_term);
        special.push_back(v);
        std::vector<std::int64_t> ps{par.c, par.b};
        for (int idx : (*classes)[static_cast<std::size_t>(j)])
            ps.push_back((ell + 1) * q * tp.values[static_cast<std::size_t>(idx)]);
        pieces.push_back(std::move(ps));
    }
    return finish_witness(par.instance(), std::move(spec), special, pieces);
}

}  // namespace stardec
