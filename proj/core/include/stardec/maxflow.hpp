#pragma once

#include <cstdint>
#include <vector>

namespace stardec {

struct FlowNetwork {
    struct Arc {
        int tail = 0;
        int head = 0;
        std::int64_t cap = 0;
    };
    int node_count = 0;
    int source = 0;
    int sink = 0;
    std::vector<Arc> arcs;  // parallel arcs stay distinct; order is meaningful
};

struct FlowResult {
    std::int64_t value = 0;
    std::vector<std::int64_t> arc_flows;  // parallel to FlowNetwork::arcs
    std::vector<char> source_side;        // min cut: residual-reachable from source
};

// Blocking-flow max flow (level graph + current-arc DFS). Deterministic: arcs
// are relaxed in input order, so identical networks give identical flows.
FlowResult max_flow(const FlowNetwork& net);

// Shortest-augmenting-path reference. Same contract, no shared code with
// max_flow; exists so the two can cross-check each other in tests.
FlowResult max_flow_reference(const FlowNetwork& net);

// Total capacity of arcs leaving the given source side.
std::int64_t cut_capacity(const FlowNetwork& net, const std::vector<char>& source_side);

// Throws InternalError unless flows are within capacity, conserved at internal
// nodes, value matches the source's net outflow, and the cut is saturated
// (forward arcs full, entering arcs empty). Cheap enough to run in tests and
// after every solve that feeds a certificate.
void check_flow_result(const FlowNetwork& net, const FlowResult& result);

}  // namespace stardec
