#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "stardec/decompose.hpp"
#include "stardec/maxflow.hpp"
#include "stardec/packing.hpp"
#include "stardec/rand.hpp"
#include "stardec/threshold.hpp"

namespace {

using namespace stardec;

FlowNetwork random_network(int nodes, int arcs, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    FlowNetwork net;
    net.node_count = nodes;
    net.source = 0;
    net.sink = nodes - 1;
    for (int i = 0; i < arcs; ++i) {
        const int u = static_cast<int>(bounded_rand(rng, static_cast<std::uint64_t>(nodes)));
        int v = static_cast<int>(bounded_rand(rng, static_cast<std::uint64_t>(nodes)));
        if (u == v) v = (v + 1) % nodes;
        const std::int64_t cap = 1 + static_cast<std::int64_t>(bounded_rand(rng, 50));
        net.arcs.push_back({u, v, cap});
    }
    return net;
}

// Center prescription resembling what the decomposer hands the flow solver:
// lambda*K_n covered by near-maximal stars dealt evenly around the vertices.
CenterSpec clique_spec(std::int64_t lambda, int n) {
    const std::int64_t m = max_star_bound(lambda, n);
    CenterSpec spec;
    spec.centers.assign(static_cast<std::size_t>(n), IntMultiset{});
    std::int64_t left = lambda * n * (n - 1) / 2;
    for (int v = 0; left > 0; v = (v + 1) % n) {
        const std::int64_t s = std::min(m, left);
        spec.centers[static_cast<std::size_t>(v)].add(s);
        left -= s;
    }
    return spec;
}

void BM_MaxFlow(benchmark::State& state) {
    const FlowNetwork net = random_network(200, 2500, 0xBE9C'0001ULL);
    for (auto _ : state) {
        FlowResult res = max_flow(net);
        benchmark::DoNotOptimize(res.value);
    }
}
BENCHMARK(BM_MaxFlow);

void BM_BuildPackingNetwork(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Multigraph g = Multigraph::complete(4, n);
    const CenterSpec spec = clique_spec(4, n);
    for (auto _ : state) {
        PackingNetwork pn = build_packing_network(g, spec);
        benchmark::DoNotOptimize(pn.net.arcs.size());
    }
}
BENCHMARK(BM_BuildPackingNetwork)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_PackClique(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Multigraph g = Multigraph::complete(4, n);
    const CenterSpec spec = clique_spec(4, n);
    for (auto _ : state) {
        PackResult pr = pack_with_centers(g, spec);
        benchmark::DoNotOptimize(pr.feasible);
    }
}
BENCHMARK(BM_PackClique)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_DecomposeHundredClique(benchmark::State& state) {
    DecompInstance inst;
    inst.lambda = 4;
    inst.n = 100;
    inst.sizes.add(90, 166);
    inst.sizes.add(73, 36);
    inst.sizes.add(72, 31);
    for (auto _ : state) {
        std::vector<Star> stars = decompose(inst);
        benchmark::DoNotOptimize(stars.size());
    }
}
BENCHMARK(BM_DecomposeHundredClique)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_EvenComparator(benchmark::State& state) {
    std::mt19937_64 rng(0xBE9C'0002ULL);
    std::vector<std::pair<std::int64_t, std::int64_t>> probes;
    probes.reserve(4096);
    for (int i = 0; i < 4096; ++i) {
        const std::int64_t n = 1 + static_cast<std::int64_t>(bounded_rand(rng, 1000000));
        probes.emplace_back(n, static_cast<std::int64_t>(bounded_rand(rng,
                                   static_cast<std::uint64_t>(n))));
    }
    for (auto _ : state) {
        bool acc = false;
        for (const auto& [n, m] : probes) acc ^= even_size_within(8, n, m);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_EvenComparator);

}  // namespace

BENCHMARK_MAIN();
