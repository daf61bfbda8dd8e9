#pragma once

#include <cstdint>
#include <random>
#include <thread>
#include <vector>

#include "cfeg/graph.hpp"
#include "cfeg/oracle.hpp"

namespace cfeg {

inline std::uint64_t labeled_graph_count(int n) {
    return std::uint64_t(1) << (n * (n - 1) / 2);
}

inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Runs fn(state, begin, end) over a partition of [0, total) into contiguous
// chunks, one worker thread per chunk. States are returned in chunk order so
// merged output is independent of the thread count.
template <typename State, typename Fn>
std::vector<State> run_partitioned(std::uint64_t total, int jobs, Fn&& fn) {
    jobs = resolve_jobs(jobs);
    if (total < static_cast<std::uint64_t>(jobs)) jobs = total ? static_cast<int>(total) : 1;
    std::vector<State> states(jobs);
    if (jobs == 1) {
        fn(states[0], 0, total);
        return states;
    }
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int t = 0; t < jobs; ++t) {
        const std::uint64_t begin = chunk * t;
        const std::uint64_t end = std::min(total, begin + chunk);
        threads.emplace_back([&fn, &states, t, begin, end] { fn(states[t], begin, end); });
    }
    for (auto& th : threads) th.join();
    return states;
}

// splitmix64; used to derive independent per-sample seeds from one master
// seed so results do not depend on how work is partitioned.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform double in [0, 1); hand-rolled because the standard library's
// distributions are not bit-stable across implementations.
inline double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Graph random_graph(int n, double edge_probability, std::mt19937_64& rng) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (next_unit(rng) < edge_probability) g.add_edge(u, v);
    return g;
}

// Rejection-samples a connected claw-free graph on n vertices, sweeping edge
// density so sparse and dense shapes both appear.
inline Graph random_connected_claw_free(int n, std::mt19937_64& rng) {
    for (;;) {
        const double p = 0.35 + 0.6 * next_unit(rng);
        Graph g = random_graph(n, p, rng);
        if (!is_connected(g)) continue;
        if (!is_claw_free(g).claw_free) continue;
        return g;
    }
}

}  // namespace cfeg
