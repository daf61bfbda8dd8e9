#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cfeg/graph.hpp"

namespace cfeg {

inline constexpr int kIsomorphismMaxVertices = 12;

// Enumerates every isomorphism g -> h (map[u] = image of u) by permutation
// backtracking with degree pruning. The callback returns false to stop the
// enumeration early. Returns false if it was stopped.
// Only intended for the tiny fixed targets of the recognizer; both graphs
// must have at most 12 vertices.
template <typename Callback>
bool for_each_isomorphism(const Graph& g, const Graph& h, Callback&& cb) {
    const int n = g.vertex_count();
    if (n > kIsomorphismMaxVertices || h.vertex_count() > kIsomorphismMaxVertices)
        throw std::invalid_argument("for_each_isomorphism: graphs must have <= 12 vertices");
    if (h.vertex_count() != n || h.edge_count() != g.edge_count()) return true;
    if (degree_sequence(g) != degree_sequence(h)) return true;

    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    auto extend = [&](auto&& self, int u) -> bool {
        if (u == n) return cb(static_cast<const std::vector<int>&>(map));
        for (int w = 0; w < n; ++w) {
            if (used[w] || g.degree(u) != h.degree(w)) continue;
            bool ok = true;
            for (int prev = 0; prev < u; ++prev) {
                if (g.adjacent(prev, u) != h.adjacent(map[prev], w)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[u] = w;
            used[w] = 1;
            bool keep_going = self(self, u + 1);
            used[w] = 0;
            map[u] = -1;
            if (!keep_going) return false;
        }
        return true;
    };
    return extend(extend, 0);
}

// First isomorphism g -> h if one exists.
inline std::optional<std::vector<int>> isomorphic_small(const Graph& g, const Graph& h) {
    std::optional<std::vector<int>> found;
    for_each_isomorphism(g, h, [&](const std::vector<int>& map) {
        found = map;
        return false;
    });
    return found;
}

inline std::vector<std::vector<int>> all_isomorphisms(const Graph& g, const Graph& h) {
    std::vector<std::vector<int>> out;
    for_each_isomorphism(g, h, [&](const std::vector<int>& map) {
        out.push_back(map);
        return true;
    });
    return out;
}

}  // namespace cfeg
