#pragma once

#include <cstdint>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cfeg/graph.hpp"

namespace cfeg {

// A matching as a list of vertex-disjoint edges (u, v) with u < v, sorted.
using Matching = std::vector<std::pair<int, int>>;

inline constexpr std::uint64_t kDefaultEnumerationLimit = 1'000'000;

// Streams every maximal (by inclusion) matching of g exactly once. Vertices
// are decided in increasing order: the lowest undecided vertex is either
// matched to each still-undecided neighbor in turn or left exposed; a vertex
// is left exposed only when no already-exposed neighbor exists, so at every
// leaf the exposed set is independent, which is exactly maximality.
// The callback returns false to stop; the function reports whether the
// enumeration ran to completion. Requires n <= 64.
template <typename Callback>
bool for_each_maximal_matching(const Graph& g, Callback&& cb) {
    const int n = g.vertex_count();
    if (n > 64) throw std::invalid_argument("for_each_maximal_matching: n > 64");
    std::vector<std::uint64_t> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.row(v)[0];
    const std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;

    Matching current;
    current.reserve(n / 2 + 1);
    auto rec = [&](auto&& self, std::uint64_t decided, std::uint64_t exposed) -> bool {
        const std::uint64_t undecided = all & ~decided;
        if (!undecided) return cb(static_cast<const Matching&>(current));
        const int v = std::countr_zero(undecided);
        // Expose-first order reaches small maximal matchings early, which
        // lets the equimatchability and randomly-matchable oracles exit
        // fast; callers that need a canonical order sort afterwards.
        if (!(adj[v] & exposed)) {
            if (!self(self, decided | (std::uint64_t(1) << v), exposed | (std::uint64_t(1) << v)))
                return false;
        }
        std::uint64_t partners = adj[v] & undecided;
        while (partners) {
            const int u = std::countr_zero(partners);
            partners &= partners - 1;
            current.emplace_back(v, u);
            bool keep_going = self(self, decided | (std::uint64_t(1) << v) | (std::uint64_t(1) << u), exposed);
            current.pop_back();
            if (!keep_going) return false;
        }
        return true;
    };
    return rec(rec, 0, 0);
}

struct MaximalMatchingList {
    std::vector<Matching> matchings;
    bool overflow = false;  // more than `limit` maximal matchings exist
};

inline MaximalMatchingList enumerate_maximal_matchings(const Graph& g,
                                                       std::uint64_t limit = kDefaultEnumerationLimit) {
    if (limit < 1) throw std::invalid_argument("enumerate_maximal_matchings: limit < 1");
    MaximalMatchingList out;
    for_each_maximal_matching(g, [&](const Matching& m) {
        if (out.matchings.size() == limit) {
            out.overflow = true;
            return false;
        }
        out.matchings.push_back(m);
        return true;
    });
    std::sort(out.matchings.begin(), out.matchings.end());
    return out;
}

// Maximum-cardinality matching via Edmonds' blossom algorithm (the classic
// O(V^3) array formulation with base[] blossom contraction), seeded greedily.
inline Matching maximum_matching(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    std::vector<int> match(n, -1), parent(n, -1), base(n);
    std::vector<char> used(n, 0), blossom(n, 0);

    auto lca = [&](int a, int b) {
        std::vector<char> on_path(n, 0);
        for (;;) {
            a = base[a];
            on_path[a] = 1;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (on_path[b]) return b;
            b = parent[match[b]];
        }
    };
    auto mark_path = [&](int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    };
    auto find_augmenting_path = [&](int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    // Odd cycle found: contract the blossom.
                    int cur_base = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n; ++i) {
                        if (!blossom[base[i]]) continue;
                        base[i] = cur_base;
                        if (!used[i]) {
                            used[i] = 1;
                            q.push(i);
                        }
                    }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    };

    for (int v = 0; v < n; ++v) {
        if (match[v] != -1) continue;
        for (int u : adj[v]) {
            if (match[u] == -1) {
                match[v] = u;
                match[u] = v;
                break;
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (match[v] != -1) continue;
        int u = find_augmenting_path(v);
        while (u != -1) {
            int pv = parent[u], ppv = match[pv];
            match[u] = pv;
            match[pv] = u;
            u = ppv;
        }
    }

    Matching out;
    for (int v = 0; v < n; ++v)
        if (match[v] > v) out.emplace_back(v, match[v]);
    return out;
}

struct OverflowableBool {
    bool value = false;
    bool overflow = false;
};

// Oracle form of "randomly matchable": every maximal matching is perfect.
// Early-exits at the first non-perfect maximal matching; overflows only if
// more than `limit` matchings were seen without a counterexample.
inline OverflowableBool is_randomly_matchable(const Graph& g,
                                              std::uint64_t limit = kDefaultEnumerationLimit) {
    if (!is_connected(g)) throw std::invalid_argument("is_randomly_matchable: graph must be connected");
    OverflowableBool out{true, false};
    std::uint64_t count = 0;
    const int n = g.vertex_count();
    for_each_maximal_matching(g, [&](const Matching& m) {
        if (2 * static_cast<int>(m.size()) != n) {
            out.value = false;
            return false;
        }
        if (++count > limit) {
            out.overflow = true;
            return false;
        }
        return true;
    });
    return out;
}

// Structural form: a connected graph is randomly matchable iff it is an even
// clique K_{2p} or a balanced complete bipartite graph K_{p,p}.
inline bool is_randomly_matchable_structural(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2 || n % 2 != 0 || !is_connected(g)) return false;
    if (is_complete(g)) return true;
    // Two-color from vertex 0; complete bipartite iff every vertex is
    // adjacent to exactly the opposite side, then check balance.
    std::vector<int> side(n, -1);
    side[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (side[u] == -1) {
                side[u] = 1 - side[v];
                stack.push_back(u);
            } else if (side[u] == side[v]) {
                return false;
            }
        }
    }
    int zero = 0;
    for (int v = 0; v < n; ++v) zero += side[v] == 0;
    if (2 * zero != n) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != n / 2) return false;
    return true;
}

// G - u has a perfect matching for every vertex u.
inline bool is_factor_critical(const Graph& g) {
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        auto sub = delete_vertex(g, u);
        if (2 * static_cast<int>(maximum_matching(sub.graph).size()) != n - 1) return false;
    }
    return true;
}

// Every edge of m must exist in g and the edges must be pairwise disjoint.
inline bool is_valid_matching(const Graph& g, const Matching& m) {
    std::vector<char> seen(g.vertex_count(), 0);
    for (auto [u, v] : m) {
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count()) return false;
        if (!g.adjacent(u, v)) return false;
        if (seen[u] || seen[v]) return false;
        seen[u] = seen[v] = 1;
    }
    return true;
}

inline bool is_maximal_matching(const Graph& g, const Matching& m) {
    if (!is_valid_matching(g, m)) return false;
    std::vector<char> saturated(g.vertex_count(), 0);
    for (auto [u, v] : m) saturated[u] = saturated[v] = 1;
    for (auto [u, v] : g.edges())
        if (!saturated[u] && !saturated[v]) return false;
    return true;
}

inline VertexSet exposed_vertices(const Graph& g, const Matching& m) {
    std::vector<char> saturated(g.vertex_count(), 0);
    for (auto [u, v] : m) saturated[u] = saturated[v] = 1;
    VertexSet out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!saturated[v]) out.push_back(v);
    return out;
}

}  // namespace cfeg
