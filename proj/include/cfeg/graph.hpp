#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cfeg {

// Undirected simple graph on vertices 0..n-1. Adjacency is kept as one
// bitset row per vertex (flat array, `words()` 64-bit words per row), so
// neighborhood operations are word-parallel. Immutable by convention once
// built: library functions never mutate their inputs, and vertex deletions
// return a relabeled copy plus a back-mapping.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        words_ = (n + 63) / 64;
        bits_.assign(static_cast<std::size_t>(n) * words_, 0);
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        return from_edges(n, std::vector<std::pair<int, int>>(edges));
    }

    // Builds a graph from a bitmask over the upper-triangle pairs in colex
    // order (0,1),(0,2),(1,2),(0,3),... -- the same bit order graph6 uses.
    static Graph from_edge_mask(int n, std::uint64_t mask) {
        if (n > 11) throw std::invalid_argument("from_edge_mask: n > 11 overflows 64 pair bits");
        Graph g(n);
        int bit = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u, ++bit)
                if (mask >> bit & 1) g.add_edge(u, v);
        return g;
    }

    static Graph complete(int n) {
        Graph g(n);
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) g.add_edge(u, v);
        return g;
    }

    static Graph cycle(int n) {
        Graph g(n);
        for (int v = 0; v < n; ++v)
            if (n > 2 || v + 1 < n) g.add_edge(v, (v + 1) % n);
        return g;
    }

    static Graph path(int n) {
        Graph g(n);
        for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
        return g;
    }

    static Graph complete_bipartite(int a, int b) {
        Graph g(a + b);
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
        return g;
    }

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_; }
    int words() const { return words_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("add_edge: self-loop");
        if (adjacent(u, v)) throw std::invalid_argument("add_edge: duplicate edge");
        set_bit(u, v);
        set_bit(v, u);
        ++edges_;
    }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
    }

    const std::uint64_t* row(int v) const {
        return bits_.data() + static_cast<std::size_t>(v) * words_;
    }

    int degree(int v) const {
        check_vertex(v);
        const std::uint64_t* r = row(v);
        int d = 0;
        for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
        return d;
    }

    std::vector<int> neighbors(int v) const {
        check_vertex(v);
        std::vector<int> out;
        const std::uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = r[w];
            while (bits) {
                out.push_back(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
        return out;
    }

    // Edges sorted lexicographically as (u, v) with u < v.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edges_);
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    }
    void set_bit(int u, int v) {
        bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t(1) << (v % 64);
    }

    int n_ = 0;
    int words_ = 0;
    std::size_t edges_ = 0;
    std::vector<std::uint64_t> bits_;
};

// A set of vertices, kept sorted and duplicate-free.
using VertexSet = std::vector<int>;

namespace detail {

// Word-array scratch used by the component scans below.
inline void clear_words(std::vector<std::uint64_t>& w) {
    std::fill(w.begin(), w.end(), 0);
}

inline bool test_bit(const std::vector<std::uint64_t>& w, int v) {
    return (w[v / 64] >> (v % 64)) & 1;
}

inline void set_bit(std::vector<std::uint64_t>& w, int v) {
    w[v / 64] |= std::uint64_t(1) << (v % 64);
}

inline int find_first(const std::vector<std::uint64_t>& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i]) return static_cast<int>(i * 64 + std::countr_zero(w[i]));
    return -1;
}

// Extracts the component of `start` within `alive` (as a bit mask into
// `comp`), removing it from `alive`. Returns the component size.
inline int pop_component(const Graph& g, std::vector<std::uint64_t>& alive,
                         std::vector<std::uint64_t>& comp, int start) {
    const int words = g.words();
    clear_words(comp);
    set_bit(comp, start);
    std::vector<std::uint64_t> frontier(words, 0);
    set_bit(frontier, start);
    int size = 0;
    while (true) {
        int v = find_first(frontier);
        if (v < 0) break;
        frontier[v / 64] &= ~(std::uint64_t(1) << (v % 64));
        ++size;
        const std::uint64_t* r = g.row(v);
        for (int w = 0; w < words; ++w) {
            std::uint64_t fresh = r[w] & alive[w] & ~comp[w];
            comp[w] |= fresh;
            frontier[w] |= fresh;
        }
    }
    for (int w = 0; w < words; ++w) alive[w] &= ~comp[w];
    return size;
}

inline std::vector<std::uint64_t> all_vertices_mask(const Graph& g) {
    std::vector<std::uint64_t> alive(std::max(g.words(), 1), 0);
    for (int v = 0; v < g.vertex_count(); ++v) set_bit(alive, v);
    return alive;
}

}  // namespace detail

// Components as sorted vertex sets, ordered by minimum element.
inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    if (g.vertex_count() == 0) return out;
    auto alive = detail::all_vertices_mask(g);
    std::vector<std::uint64_t> comp(g.words(), 0);
    int start;
    while ((start = detail::find_first(alive)) >= 0) {
        detail::pop_component(g, alive, comp, start);
        VertexSet vs;
        for (int v = start; v < g.vertex_count(); ++v)
            if (detail::test_bit(comp, v)) vs.push_back(v);
        out.push_back(std::move(vs));
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    auto alive = detail::all_vertices_mask(g);
    std::vector<std::uint64_t> comp(g.words(), 0);
    return detail::pop_component(g, alive, comp, 0) == g.vertex_count();
}

// Counts of odd- and even-order components of g minus `removed`.
inline std::pair<int, int> odd_even_component_counts(const Graph& g, const VertexSet& removed) {
    auto alive = detail::all_vertices_mask(g);
    for (int v : removed) {
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("removed vertex out of range");
        alive[v / 64] &= ~(std::uint64_t(1) << (v % 64));
    }
    std::vector<std::uint64_t> comp(std::max(g.words(), 1), 0);
    int odd = 0, even = 0;
    int start;
    while ((start = detail::find_first(alive)) >= 0) {
        int size = detail::pop_component(g, alive, comp, start);
        (size % 2 ? odd : even)++;
    }
    return {odd, even};
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

inline bool is_complete(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != g.vertex_count() - 1) return false;
    return true;
}

// True iff g is (isomorphic to) the 4-cycle: 4 vertices, 4 edges, all degree 2.
inline bool is_cycle_c4(const Graph& g) {
    if (g.vertex_count() != 4 || g.edge_count() != 4) return false;
    for (int v = 0; v < 4; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

// Result of an induced-subgraph operation: `original[i]` is the input-graph
// vertex that became vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> original;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<int> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        if (index[keep[i]] != -1) throw std::invalid_argument("induced_subgraph: duplicate vertex");
        index[keep[i]] = static_cast<int>(i);
    }
    InducedSubgraph out{Graph(static_cast<int>(keep.size())), keep};
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j]))
                out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

inline InducedSubgraph delete_vertices(const Graph& g, const VertexSet& removed) {
    std::vector<char> gone(g.vertex_count(), 0);
    for (int v : removed) {
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("delete_vertices: vertex out of range");
        gone[v] = 1;
    }
    VertexSet keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!gone[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

inline InducedSubgraph delete_vertex(const Graph& g, int v) {
    return delete_vertices(g, {v});
}

inline std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

// Minimum vertex-cut size if it is <= cap, nullopt for "> cap".
// Disconnected graphs and graphs with n <= 1 report 0; complete graphs use
// the kappa(K_n) = n-1 convention. Brute force over all subsets of size <= cap.
inline std::optional<int> vertex_connectivity_capped(const Graph& g, int cap) {
    if (cap < 0) throw std::invalid_argument("vertex_connectivity_capped: negative cap");
    const int n = g.vertex_count();
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;
    if (is_complete(g)) {
        if (n - 1 <= cap) return n - 1;
        return std::nullopt;
    }
    VertexSet subset;
    // Enumerate subsets of size k in lexicographic order.
    auto search = [&](auto&& self, int k, int next) -> bool {
        if (static_cast<int>(subset.size()) == k) {
            auto sub = delete_vertices(g, subset);
            return !is_connected(sub.graph);
        }
        for (int v = next; v < n; ++v) {
            subset.push_back(v);
            if (self(self, k, v + 1)) return true;
            subset.pop_back();
        }
        return false;
    };
    for (int k = 1; k <= std::min(cap, n - 2); ++k) {
        subset.clear();
        if (search(search, k, 0)) return k;
    }
    return std::nullopt;
}

inline std::string to_string(const Graph& g) {
    std::string s = "G(n=" + std::to_string(g.vertex_count()) + ";";
    for (auto [u, v] : g.edges()) s += " " + std::to_string(u) + "-" + std::to_string(v);
    s += ")";
    return s;
}

}  // namespace cfeg
