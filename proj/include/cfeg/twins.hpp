#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "cfeg/graph.hpp"

namespace cfeg {

// Quotient of a graph under iterated true-twin contraction: `quotient` has
// no pair of adjacent vertices with equal closed neighborhoods, and blowing
// each quotient vertex i back up into a clique of multiplicity[i] vertices
// recovers the input up to isomorphism. vertex_class maps every input vertex
// to its quotient vertex.
struct TwinReduction {
    Graph quotient;
    std::vector<int> multiplicity;
    std::vector<int> vertex_class;
    int rounds = 0;
};

// True twins (adjacent, same closed neighborhood) form equivalence classes,
// so each round contracts whole classes at once instead of single pairs;
// classes are found by sorting the closed-neighborhood rows, which touches
// each row O(log n) times per round. The class representative is the
// lowest-indexed member, matching a lowest-pair-first merge order.
inline TwinReduction twin_reduce(const Graph& g) {
    TwinReduction out;
    out.quotient = g;
    const int n0 = g.vertex_count();
    out.multiplicity.assign(n0, 1);
    out.vertex_class.resize(n0);
    std::iota(out.vertex_class.begin(), out.vertex_class.end(), 0);

    while (true) {
        const Graph& cur = out.quotient;
        const int n = cur.vertex_count();
        const int words = cur.words();
        if (n <= 1) break;
        ++out.rounds;

        // Closed-neighborhood key per vertex.
        std::vector<std::uint64_t> keys(static_cast<std::size_t>(n) * words);
        for (int v = 0; v < n; ++v) {
            const std::uint64_t* r = cur.row(v);
            std::uint64_t* k = keys.data() + static_cast<std::size_t>(v) * words;
            for (int w = 0; w < words; ++w) k[w] = r[w];
            k[v / 64] |= std::uint64_t(1) << (v % 64);
        }
        auto key_less = [&](int a, int b) {
            const std::uint64_t* ka = keys.data() + static_cast<std::size_t>(a) * words;
            const std::uint64_t* kb = keys.data() + static_cast<std::size_t>(b) * words;
            for (int w = 0; w < words; ++w)
                if (ka[w] != kb[w]) return ka[w] < kb[w];
            return a < b;
        };
        auto key_equal = [&](int a, int b) {
            const std::uint64_t* ka = keys.data() + static_cast<std::size_t>(a) * words;
            const std::uint64_t* kb = keys.data() + static_cast<std::size_t>(b) * words;
            for (int w = 0; w < words; ++w)
                if (ka[w] != kb[w]) return false;
            return true;
        };

        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), key_less);

        // class_of[v] = lowest-indexed vertex with the same closed neighborhood.
        std::vector<int> class_of(n);
        bool any_merge = false;
        for (int i = 0; i < n;) {
            int j = i;
            int rep = order[i];
            while (j < n && key_equal(order[i], order[j])) {
                rep = std::min(rep, order[j]);
                ++j;
            }
            if (j - i > 1) any_merge = true;
            for (int k = i; k < j; ++k) class_of[order[k]] = rep;
            i = j;
        }
        if (!any_merge) break;

        // Relabel representatives to 0..n'-1 in increasing old-index order.
        std::vector<int> new_index(n, -1);
        int next = 0;
        for (int v = 0; v < n; ++v)
            if (class_of[v] == v) new_index[v] = next++;

        Graph reduced(next);
        std::vector<int> mult(next, 0);
        for (int v = 0; v < n; ++v) mult[new_index[class_of[v]]] += out.multiplicity[v];
        for (int u = 0; u < n; ++u) {
            if (class_of[u] != u) continue;
            for (int v = u + 1; v < n; ++v) {
                if (class_of[v] != v) continue;
                // Representatives inherit adjacency: twins see identical
                // neighborhoods outside their class.
                if (cur.adjacent(u, v)) reduced.add_edge(new_index[u], new_index[v]);
            }
        }
        for (int orig = 0; orig < n0; ++orig)
            out.vertex_class[orig] = new_index[class_of[out.vertex_class[orig]]];
        out.quotient = std::move(reduced);
        out.multiplicity = std::move(mult);
    }
    return out;
}

}  // namespace cfeg
