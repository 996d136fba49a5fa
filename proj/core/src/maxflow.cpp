#include "stardec/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "stardec/errors.hpp"

namespace stardec {

namespace {

void validate(const FlowNetwork& net) {
    if (net.node_count < 2) throw InputError("flow network needs at least 2 nodes");
    if (net.source == net.sink) throw InputError("flow network source == sink");
    auto in_range = [&](int v) { return v >= 0 && v < net.node_count; };
    if (!in_range(net.source) || !in_range(net.sink))
        throw InputError("flow network source/sink out of range");
    for (const auto& arc : net.arcs) {
        if (!in_range(arc.tail) || !in_range(arc.head))
            throw InputError("flow arc endpoint out of range");
        if (arc.cap < 0) throw InputError("flow arc capacity must be >= 0");
    }
}

// Residual arc soup: forward arcs at even indices 2i, their reverses at 2i+1.
struct Residual {
    std::vector<int> head;
    std::vector<std::int64_t> cap;
    std::vector<std::vector<int>> out;  // per node, arc indices in input order

    explicit Residual(const FlowNetwork& net) {
        head.reserve(net.arcs.size() * 2);
        cap.reserve(net.arcs.size() * 2);
        out.resize(static_cast<std::size_t>(net.node_count));
        for (const auto& arc : net.arcs) {
            out[static_cast<std::size_t>(arc.tail)].push_back(static_cast<int>(head.size()));
            head.push_back(arc.head);
            cap.push_back(arc.cap);
            out[static_cast<std::size_t>(arc.head)].push_back(static_cast<int>(head.size()));
            head.push_back(arc.tail);
            cap.push_back(0);
        }
    }

    std::vector<char> reachable_from(int s) const {
        std::vector<char> seen(out.size(), 0);
        std::queue<int> q;
        seen[static_cast<std::size_t>(s)] = 1;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int e : out[static_cast<std::size_t>(u)]) {
                if (cap[static_cast<std::size_t>(e)] > 0 &&
                    !seen[static_cast<std::size_t>(head[static_cast<std::size_t>(e)])]) {
                    seen[static_cast<std::size_t>(head[static_cast<std::size_t>(e)])] = 1;
                    q.push(head[static_cast<std::size_t>(e)]);
                }
            }
        }
        return seen;
    }

    FlowResult finish(const FlowNetwork& net, std::int64_t value) const {
        FlowResult res;
        res.value = value;
        res.arc_flows.resize(net.arcs.size());
        for (std::size_t i = 0; i < net.arcs.size(); ++i)
            res.arc_flows[i] = cap[2 * i + 1];  // reverse residual == pushed flow
        res.source_side = reachable_from(net.source);
        return res;
    }
};

}  // namespace

FlowResult max_flow(const FlowNetwork& net) {
    validate(net);
    Residual r(net);
    const int n = net.node_count, s = net.source, t = net.sink;
    std::vector<int> level(static_cast<std::size_t>(n));
    std::vector<std::size_t> iter(static_cast<std::size_t>(n));
    std::int64_t total = 0;

    auto bfs = [&]() {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[static_cast<std::size_t>(s)] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int e : r.out[static_cast<std::size_t>(u)]) {
                int v = r.head[static_cast<std::size_t>(e)];
                if (r.cap[static_cast<std::size_t>(e)] > 0 && level[static_cast<std::size_t>(v)] < 0) {
                    level[static_cast<std::size_t>(v)] = level[static_cast<std::size_t>(u)] + 1;
                    q.push(v);
                }
            }
        }
        return level[static_cast<std::size_t>(t)] >= 0;
    };

    // Iterative DFS with a current-arc pointer per node.
    std::vector<int> path_node(static_cast<std::size_t>(n) + 1);
    std::vector<int> path_arc(static_cast<std::size_t>(n) + 1);
    while (bfs()) {
        std::fill(iter.begin(), iter.end(), 0);
        for (;;) {
            int depth = 0;
            path_node[0] = s;
            std::int64_t bottleneck = -1;
            while (true) {
                int u = path_node[static_cast<std::size_t>(depth)];
                if (u == t) {
                    bottleneck = std::numeric_limits<std::int64_t>::max();
                    for (int i = 0; i < depth; ++i)
                        bottleneck = std::min(bottleneck,
                                              r.cap[static_cast<std::size_t>(path_arc[static_cast<std::size_t>(i)])]);
                    break;
                }
                auto& it = iter[static_cast<std::size_t>(u)];
                const auto& arcs = r.out[static_cast<std::size_t>(u)];
                bool advanced = false;
                while (it < arcs.size()) {
                    int e = arcs[it];
                    int v = r.head[static_cast<std::size_t>(e)];
                    if (r.cap[static_cast<std::size_t>(e)] > 0 &&
                        level[static_cast<std::size_t>(v)] == level[static_cast<std::size_t>(u)] + 1) {
                        path_arc[static_cast<std::size_t>(depth)] = e;
                        path_node[static_cast<std::size_t>(++depth)] = v;
                        advanced = true;
                        break;
                    }
                    ++it;
                }
                if (advanced) continue;
                // Dead end: retreat, exhausting the arc that led here.
                if (depth == 0) break;
                --depth;
                ++iter[static_cast<std::size_t>(path_node[static_cast<std::size_t>(depth)])];
            }
            if (bottleneck < 0) break;  // level graph exhausted
            for (int i = 0; i < depth; ++i) {
                int e = path_arc[static_cast<std::size_t>(i)];
                r.cap[static_cast<std::size_t>(e)] -= bottleneck;
                r.cap[static_cast<std::size_t>(e ^ 1)] += bottleneck;
            }
            total += bottleneck;
        }
    }
    return r.finish(net, total);
}

FlowResult max_flow_reference(const FlowNetwork& net) {
    validate(net);
    Residual r(net);
    const int s = net.source, t = net.sink;
    std::int64_t total = 0;
    for (;;) {
        // Plain BFS for any augmenting path; parent arc per node.
        std::vector<int> parent_arc(static_cast<std::size_t>(net.node_count), -1);
        std::vector<char> seen(static_cast<std::size_t>(net.node_count), 0);
        std::queue<int> q;
        seen[static_cast<std::size_t>(s)] = 1;
        q.push(s);
        while (!q.empty() && !seen[static_cast<std::size_t>(t)]) {
            int u = q.front();
            q.pop();
            for (int e : r.out[static_cast<std::size_t>(u)]) {
                int v = r.head[static_cast<std::size_t>(e)];
                if (r.cap[static_cast<std::size_t>(e)] > 0 && !seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    parent_arc[static_cast<std::size_t>(v)] = e;
                    q.push(v);
                }
            }
        }
        if (!seen[static_cast<std::size_t>(t)]) break;
        std::int64_t bottleneck = std::numeric_limits<std::int64_t>::max();
        for (int v = t; v != s;) {
            int e = parent_arc[static_cast<std::size_t>(v)];
            bottleneck = std::min(bottleneck, r.cap[static_cast<std::size_t>(e)]);
            v = r.head[static_cast<std::size_t>(e ^ 1)];
        }
        for (int v = t; v != s;) {
            int e = parent_arc[static_cast<std::size_t>(v)];
            r.cap[static_cast<std::size_t>(e)] -= bottleneck;
            r.cap[static_cast<std::size_t>(e ^ 1)] += bottleneck;
            v = r.head[static_cast<std::size_t>(e ^ 1)];
        }
        total += bottleneck;
    }
    return r.finish(net, total);
}

std::int64_t cut_capacity(const FlowNetwork& net, const std::vector<char>& source_side) {
    if (source_side.size() != static_cast<std::size_t>(net.node_count))
        throw InputError("cut side size mismatch");
    std::int64_t cap = 0;
    for (const auto& arc : net.arcs)
        if (source_side[static_cast<std::size_t>(arc.tail)] &&
            !source_side[static_cast<std::size_t>(arc.head)])
            cap += arc.cap;
    return cap;
}

void check_flow_result(const FlowNetwork& net, const FlowResult& result) {
    if (result.arc_flows.size() != net.arcs.size())
        throw InternalError("flow result arc count mismatch");
    std::vector<std::int64_t> net_out(static_cast<std::size_t>(net.node_count), 0);
    for (std::size_t i = 0; i < net.arcs.size(); ++i) {
        const auto& arc = net.arcs[i];
        std::int64_t f = result.arc_flows[i];
        if (f < 0 || f > arc.cap) throw InternalError("arc flow outside [0, cap]");
        net_out[static_cast<std::size_t>(arc.tail)] += f;
        net_out[static_cast<std::size_t>(arc.head)] -= f;
    }
    for (int v = 0; v < net.node_count; ++v) {
        if (v == net.source || v == net.sink) continue;
        if (net_out[static_cast<std::size_t>(v)] != 0)
            throw InternalError("flow not conserved at node " + std::to_string(v));
    }
    if (net_out[static_cast<std::size_t>(net.source)] != result.value)
        throw InternalError("flow value does not match source outflow");
    if (result.source_side.size() != static_cast<std::size_t>(net.node_count))
        throw InternalError("cut side size mismatch");
    if (!result.source_side[static_cast<std::size_t>(net.source)] ||
        result.source_side[static_cast<std::size_t>(net.sink)])
        throw InternalError("cut does not separate source from sink");
    for (std::size_t i = 0; i < net.arcs.size(); ++i) {
        const auto& arc = net.arcs[i];
        bool tail_in = result.source_side[static_cast<std::size_t>(arc.tail)];
        bool head_in = result.source_side[static_cast<std::size_t>(arc.head)];
        if (tail_in && !head_in && result.arc_flows[i] != arc.cap)
            throw InternalError("cut arc not saturated");
        if (!tail_in && head_in && result.arc_flows[i] != 0)
            throw InternalError("arc entering the cut carries flow");
    }
    if (cut_capacity(net, result.source_side) != result.value)
        throw InternalError("max-flow value differs from min-cut capacity");
}

}  // namespace stardec
