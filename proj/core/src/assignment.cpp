#include "stardec/assignment.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "stardec/errors.hpp"

namespace stardec {

MergePlan merge_small(const IntMultiset& sizes, std::int64_t m) {
    if (!sizes.empty() && sizes.max() > m)
        throw InputError("merge_small requires every size <= m");
    MergePlan plan;
    plan.final_sizes = sizes;
    while (plan.final_sizes.size() >= 2) {
        std::int64_t a = plan.final_sizes.min();
        plan.final_sizes.remove(a);
        std::int64_t b = plan.final_sizes.min();
        if (a + b > m) {
            plan.final_sizes.add(a);
            break;
        }
        plan.final_sizes.remove(b);
        plan.final_sizes.add(a + b);
        plan.merges.push_back({a + b, a, b});
    }
    return plan;
}

std::vector<Star> split_back(std::vector<Star> stars, const MergePlan& plan) {
    for (auto it = plan.merges.rbegin(); it != plan.merges.rend(); ++it) {
        bool found = false;
        for (auto& star : stars) {
            if (star.size() != it->merged) continue;
            std::sort(star.leaves.begin(), star.leaves.end());
            Star right;
            right.center = star.center;
            right.leaves.assign(star.leaves.begin() + it->left, star.leaves.end());
            star.leaves.resize(static_cast<std::size_t>(it->left));
            stars.push_back(std::move(right));
            found = true;
            break;
        }
        if (!found)
            throw InputError("split_back found no star of size " + std::to_string(it->merged));
    }
    return stars;
}

Assignment greedy_assign(const IntMultiset& sizes, std::int64_t n) {
    if (n < 1) throw InputError("greedy_assign needs n >= 1");
    Assignment out;
    out.per_vertex.assign(static_cast<std::size_t>(n), IntMultiset{});
    // (current sum, vertex) ordered set: begin() is the min-sum vertex with the
    // lowest index, which is exactly the tie rule.
    std::set<std::pair<std::int64_t, std::int64_t>> order;
    for (std::int64_t v = 0; v < n; ++v) order.emplace(0, v);
    for (const auto& [size, mult] : sizes.runs()) {
        for (std::int64_t i = 0; i < mult; ++i) {
            auto [sum, v] = *order.begin();
            order.erase(order.begin());
            out.per_vertex[static_cast<std::size_t>(v)].add(size);
            order.emplace(sum + size, v);
        }
    }
    return out;
}

Assignment equitable_assign(const IntMultiset& sizes, std::int64_t n) {
    Assignment out = greedy_assign(sizes, n);
    std::vector<std::int64_t> sums(static_cast<std::size_t>(n), 0);
    for (std::int64_t v = 0; v < n; ++v) sums[static_cast<std::size_t>(v)] = out.per_vertex[static_cast<std::size_t>(v)].sum();

    // One swap per (u,v) visit, first violating element pair in x-ascending,
    // y-descending order; keep sweeping until a full pass is clean. Each swap
    // lowers sum-of-squares of the sums by 2(y-x)(gap-(y-x)) > 0, so this ends.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::int64_t u = 0; u < n; ++u) {
            for (std::int64_t v = 0; v < n; ++v) {
                auto& mu = out.per_vertex[static_cast<std::size_t>(u)];
                auto& mv = out.per_vertex[static_cast<std::size_t>(v)];
                std::int64_t gap = sums[static_cast<std::size_t>(v)] - sums[static_cast<std::size_t>(u)];
                if (gap <= 0 || mu.empty() || mv.empty()) continue;
                // Find the swap first, mutate after: remove() can erase the
                // very map node an iterator is parked on.
                std::int64_t sx = 0, sy = 0;
                bool swapped = false;
                for (auto xit = mu.runs().rbegin(); xit != mu.runs().rend() && !swapped; ++xit) {
                    const std::int64_t x = xit->first;
                    for (const auto& [y, ymult] : mv.runs()) {
                        if (y <= x) break;  // descending, nothing smaller will qualify
                        if (gap > y - x) {
                            sx = x;
                            sy = y;
                            swapped = true;
                            break;
                        }
                    }
                }
                if (swapped) {
                    mu.remove(sx);
                    mu.add(sy);
                    mv.remove(sy);
                    mv.add(sx);
                    sums[static_cast<std::size_t>(u)] += sy - sx;
                    sums[static_cast<std::size_t>(v)] -= sy - sx;
                    changed = true;
                }
            }
        }
    }
    return out;
}

namespace {

IntMultiset compress_core(const IntMultiset& m_v, std::int64_t m, std::int64_t off, bool case1,
                          std::int64_t k) {
    const std::int64_t s = m_v.sum();
    if (m_v.empty() || m_v.max() > m)
        throw InputError("compression needs a nonempty multiset with elements <= m");
    IntMultiset out;
    if (case1) {
        if (!(k * m < s && s <= (k + 2) * m))
            throw InputError("compression case 1: sum " + std::to_string(s) + " outside (" +
                             std::to_string(k * m) + ", " + std::to_string((k + 2) * m) + "]");
        std::int64_t full = s <= (k + 1) * m ? k : k + 1;
        if (full > 0) out.add(m, full);
        if (s - full * m > 0) out.add(s - full * m);
    } else {
        if (!(off * m < s && s <= (off + 2) * m))
            throw InputError("compression case 2: sum " + std::to_string(s) + " outside (" +
                             std::to_string(off * m) + ", " + std::to_string((off + 2) * m) + "]");
        if (m_v.size() < off + 1)
            throw InternalError("compression case 2: multiset smaller than its sum allows");
        // The tail value must cover the top off+1 original elements and leave
        // a remainder no larger than itself; take the smallest such value.
        std::int64_t rest = s - off * m;
        std::int64_t y = std::max(m_v.sum_top(off + 1) - off * m, (rest + 1) / 2);
        if (y < 1 || y > m) throw InternalError("compression tail out of range");
        if (off > 0) out.add(m, off);
        out.add(y);
        if (rest - y > 0) {
            if (rest - y > y) throw InternalError("compression remainder exceeds tail");
            out.add(rest - y);
        }
    }
    if (out.sum() != s) throw InternalError("compression changed the sum");
    return out;
}

}  // namespace

IntMultiset compress_odd(const IntMultiset& m_v, std::int64_t m, std::int64_t ell, bool case1,
                         std::int64_t k) {
    if (ell < 1) throw InputError("odd compression needs ell >= 1");
    if (case1 && k < ell + 1) throw InputError("odd compression case 1 needs k >= ell+1");
    return compress_core(m_v, m, ell, case1, k);
}

IntMultiset compress_even(const IntMultiset& m_v, std::int64_t m, std::int64_t ell, bool case1,
                          std::int64_t k) {
    if (ell < 1) throw InputError("even compression needs ell >= 1");
    if (case1 && k < ell) throw InputError("even compression case 1 needs k >= ell");
    return compress_core(m_v, m, ell - 1, case1, k);
}

}  // namespace stardec
