#include "stardec/packing.hpp"

#include <algorithm>
#include <string>

#include "stardec/errors.hpp"

namespace stardec {

std::int64_t CenterSpec::total_size() const {
    std::int64_t total = 0;
    for (const auto& m : centers) total += m.sum();
    return total;
}

std::int64_t CenterSpec::star_count() const {
    std::int64_t total = 0;
    for (const auto& m : centers) total += m.size();
    return total;
}

namespace {

void validate_spec(const Multigraph& g, const CenterSpec& spec) {
    if (static_cast<std::int64_t>(spec.centers.size()) != g.n())
        throw InputError("center spec covers " + std::to_string(spec.centers.size()) +
                         " vertices, graph has " + std::to_string(g.n()));
}

void validate_restriction(const CenterSpec& spec, const RestrictionFunction& f) {
    if (f.f.size() != spec.centers.size())
        throw InputError("restriction function size mismatch");
    for (std::size_t v = 0; v < f.f.size(); ++v)
        if (f.f[v] < 0 || f.f[v] > spec.centers[v].size())
            throw InputError("f(" + std::to_string(v) + ")=" + std::to_string(f.f[v]) +
                             " outside [0, " + std::to_string(spec.centers[v].size()) + "]");
}

}  // namespace

DeltaReport delta_eval(const Multigraph& g, const CenterSpec& spec, const RestrictionFunction& f) {
    validate_spec(g, spec);
    validate_restriction(spec, f);
    DeltaReport rep;
    for (std::size_t v = 0; v < f.f.size(); ++v)
        rep.minus += spec.centers[v].sum_top(f.f[v]);
    g.for_each_pair([&](int u, int v, std::int64_t mu) {
        rep.plus += std::min(f.f[static_cast<std::size_t>(u)] + f.f[static_cast<std::size_t>(v)], mu);
    });
    rep.delta = rep.plus - rep.minus;
    return rep;
}

PackingNetwork build_packing_network(const Multigraph& g, const CenterSpec& spec) {
    validate_spec(g, spec);
    PackingNetwork pn;
    const int n = static_cast<int>(g.n());

    for (int v = 0; v < n; ++v)
        for (const auto& [size, mult] : spec.centers[static_cast<std::size_t>(v)].runs())
            for (std::int64_t i = 0; i < mult; ++i) pn.star_nodes.emplace_back(v, size);

    std::map<std::pair<int, int>, int> pair_id;
    g.for_each_pair([&](int u, int v, std::int64_t) {
        pair_id[{u, v}] = static_cast<int>(pn.pair_nodes.size());
        pn.pair_nodes.emplace_back(u, v);
    });

    const int s_count = static_cast<int>(pn.star_nodes.size());
    const int t_count = static_cast<int>(pn.pair_nodes.size());
    pn.net.node_count = 1 + s_count + t_count + 1;
    pn.net.source = 0;
    pn.net.sink = pn.net.node_count - 1;
    auto star_node = [&](int i) { return 1 + i; };
    auto pair_node = [&](int t) { return 1 + s_count + t; };

    for (int i = 0; i < s_count; ++i)
        pn.net.arcs.push_back({0, star_node(i), pn.star_nodes[static_cast<std::size_t>(i)].second});

    pn.unit_arcs_begin = pn.net.arcs.size();
    for (int i = 0; i < s_count; ++i) {
        int v = pn.star_nodes[static_cast<std::size_t>(i)].first;
        for (int w = 0; w < n; ++w) {
            if (w == v || g.mu(v, w) == 0) continue;
            auto it = pair_id.find({std::min(v, w), std::max(v, w)});
            pn.net.arcs.push_back({star_node(i), pair_node(it->second), 1});
        }
    }

    pn.sink_arcs_begin = pn.net.arcs.size();
    for (int t = 0; t < t_count; ++t) {
        auto [u, v] = pn.pair_nodes[static_cast<std::size_t>(t)];
        pn.net.arcs.push_back({pair_node(t), pn.net.sink, g.mu(u, v)});
    }
    return pn;
}

PackResult pack_with_centers(const Multigraph& g, const CenterSpec& spec) {
    PackingNetwork pn = build_packing_network(g, spec);
    const std::int64_t want = spec.total_size();
    FlowResult flow = max_flow(pn.net);
    PackResult out;

    if (flow.value == want) {
        out.feasible = true;
        // Star i's leaves are exactly the saturated unit arcs out of its node.
        out.stars.reserve(pn.star_nodes.size());
        std::size_t arc = pn.unit_arcs_begin;
        for (std::size_t i = 0; i < pn.star_nodes.size(); ++i) {
            auto [v, size] = pn.star_nodes[i];
            Star star;
            star.center = v;
            for (; arc < pn.sink_arcs_begin && pn.net.arcs[arc].tail == 1 + static_cast<int>(i);
                 ++arc) {
                if (flow.arc_flows[arc] == 1) {
                    auto [pu, pv] = pn.pair_nodes[static_cast<std::size_t>(
                        pn.net.arcs[arc].head - 1 - static_cast<int>(pn.star_nodes.size()))];
                    star.leaves.push_back(pu == v ? pv : pu);
                }
            }
            if (star.size() != size)
                throw InternalError("extracted star size " + std::to_string(star.size()) +
                                    " != prescribed " + std::to_string(size));
            out.stars.push_back(std::move(star));
        }
        return out;
    }

    if (flow.value > want) throw InternalError("flow exceeds prescribed total");
    // Read f off the min cut: f(v) counts v's star nodes on the source side.
    out.f.f.assign(spec.centers.size(), 0);
    for (std::size_t i = 0; i < pn.star_nodes.size(); ++i)
        if (flow.source_side[1 + i]) ++out.f.f[static_cast<std::size_t>(pn.star_nodes[i].first)];
    out.report = delta_eval(g, spec, out.f);
    if (out.report.delta >= 0)
        throw InternalError("deficient flow but cut certificate has delta " +
                            std::to_string(out.report.delta));
    return out;
}

bool multistar_feasible(const IntMultiset& center_mults, const IntMultiset& sizes) {
    // For each s, the s largest stars can use at most min(s, mu(cv)) copies of
    // each leaf edge class, so the top-s sizes must fit under that budget.
    std::int64_t top = 0, s = 0;
    for (const auto& [size, mult] : sizes.runs()) {
        for (std::int64_t i = 0; i < mult; ++i) {
            ++s;
            top += size;
            std::int64_t budget = 0;
            for (const auto& [mu, count] : center_mults.runs())
                budget += std::min(s, mu) * count;
            if (top > budget) return false;
        }
    }
    return true;
}

std::vector<Star> multistar_decompose(int center, const std::map<int, std::int64_t>& leaf_mults,
                                      const IntMultiset& sizes) {
    IntMultiset mults;
    std::int64_t total = 0;
    for (const auto& [leaf, mu] : leaf_mults) {
        if (leaf == center) throw InputError("multistar leaf equals its center");
        if (mu < 1) throw InputError("multistar leaf multiplicity must be >= 1");
        mults.add(mu);
        total += mu;
    }
    if (total != sizes.sum())
        throw InputError("multistar has " + std::to_string(total) + " edges but sizes sum to " +
                         std::to_string(sizes.sum()));
    if (!multistar_feasible(mults, sizes)) {
        // Name the first violated prefix for the error message.
        std::int64_t top = 0, s = 0;
        for (const auto& [size, mult] : sizes.runs()) {
            for (std::int64_t i = 0; i < mult; ++i) {
                ++s;
                top += size;
                std::int64_t budget = 0;
                for (const auto& [mu, count] : mults.runs()) budget += std::min(s, mu) * count;
                if (top > budget)
                    throw InputError("multistar cannot host its " + std::to_string(s) +
                                     " largest sizes: need " + std::to_string(top) + ", have " +
                                     std::to_string(budget));
            }
        }
    }
    if (sizes.empty()) return {};

    // Local relabel: center -> 0, leaves -> 1.. in ascending original id.
    std::vector<int> back;
    back.reserve(leaf_mults.size() + 1);
    back.push_back(center);
    Multigraph local(static_cast<std::int64_t>(leaf_mults.size()) + 1);
    for (const auto& [leaf, mu] : leaf_mults) {
        back.push_back(leaf);
        local.add_edges(0, static_cast<int>(back.size()) - 1, mu);
    }
    CenterSpec spec;
    spec.centers.assign(static_cast<std::size_t>(local.n()), IntMultiset{});
    spec.centers[0] = sizes;
    PackResult packed = pack_with_centers(local, spec);
    if (!packed.feasible)
        throw InternalError("multistar passed the prefix inequalities but failed to pack");
    std::vector<Star> out;
    out.reserve(packed.stars.size());
    for (auto& star : packed.stars) {
        Star mapped;
        mapped.center = center;
        mapped.leaves.reserve(star.leaves.size());
        for (int leaf : star.leaves) mapped.leaves.push_back(back[static_cast<std::size_t>(leaf)]);
        std::sort(mapped.leaves.begin(), mapped.leaves.end());
        out.push_back(std::move(mapped));
    }
    return out;
}

}  // namespace stardec
