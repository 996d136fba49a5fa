#include <doctest.h>

#include <random>

#include "stardec/maxflow.hpp"
#include "stardec/rand.hpp"

using namespace stardec;

namespace {

FlowNetwork diamond() {
    // 0 -> {1,2} -> 3 with a cross arc; classic value 19.
    FlowNetwork net;
    net.node_count = 4;
    net.source = 0;
    net.sink = 3;
    net.arcs = {{0, 1, 10}, {0, 2, 10}, {1, 2, 5}, {1, 3, 4}, {2, 3, 15}};
    return net;
}

}  // namespace

TEST_CASE("known small networks") {
    const FlowResult r = max_flow(diamond());
    check_flow_result(diamond(), r);
    CHECK(r.value == 19);
    CHECK(cut_capacity(diamond(), r.source_side) == 19);

    FlowNetwork parallel;
    parallel.node_count = 2;
    parallel.source = 0;
    parallel.sink = 1;
    parallel.arcs = {{0, 1, 3}, {0, 1, 4}, {1, 0, 9}};  // backward arc is no help
    const FlowResult p = max_flow(parallel);
    CHECK(p.value == 7);
    CHECK(p.arc_flows[0] == 3);
    CHECK(p.arc_flows[1] == 4);
    CHECK(p.arc_flows[2] == 0);

    FlowNetwork disconnected;
    disconnected.node_count = 3;
    disconnected.source = 0;
    disconnected.sink = 2;
    disconnected.arcs = {{0, 1, 5}};
    CHECK(max_flow(disconnected).value == 0);
}

TEST_CASE("engine matches reference on random networks") {
    for (int rep = 0; rep < 300; ++rep) {
        std::mt19937_64 rng(substream_seed(0xF10Cull, static_cast<std::uint64_t>(rep)));
        FlowNetwork net;
        net.node_count = 2 + static_cast<int>(bounded_rand(rng, 9));
        net.source = 0;
        net.sink = net.node_count - 1;
        const int arcs = static_cast<int>(bounded_rand(rng, 25));
        for (int i = 0; i < arcs; ++i) {
            FlowNetwork::Arc a;
            a.tail = static_cast<int>(bounded_rand(rng, static_cast<std::uint64_t>(net.node_count)));
            a.head = static_cast<int>(bounded_rand(rng, static_cast<std::uint64_t>(net.node_count)));
            if (a.head == a.tail) a.head = (a.head + 1) % net.node_count;
            a.cap = static_cast<std::int64_t>(bounded_rand(rng, 16));
            net.arcs.push_back(a);
        }
        const FlowResult fast = max_flow(net);
        const FlowResult ref = max_flow_reference(net);
        check_flow_result(net, fast);
        check_flow_result(net, ref);
        REQUIRE(fast.value == ref.value);
        REQUIRE(cut_capacity(net, fast.source_side) == fast.value);
    }
}

TEST_CASE("deterministic arc flows") {
    const FlowResult a = max_flow(diamond());
    const FlowResult b = max_flow(diamond());
    CHECK(a.arc_flows == b.arc_flows);
    CHECK(a.source_side == b.source_side);
}
