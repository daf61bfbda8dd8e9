#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

#include "cfeg/graph.hpp"
#include "cfeg/matching.hpp"

namespace cfeg {

// ---- certificates ----------------------------------------------------

struct ClawCertificate {
    int center;
    std::array<int, 3> leaves;  // pairwise non-adjacent neighbors of center
};

struct UnequalMatchingsCertificate {
    Matching first;
    Matching second;  // both maximal, different sizes
};

// An independent 3-set whose removal leaves fewer than two odd components;
// for a connected claw-free odd graph this refutes equimatchability.
struct BadTripleCertificate {
    std::array<int, 3> vertices;
};

struct DisconnectedCertificate {
    std::vector<VertexSet> components;
};

using Certificate = std::variant<ClawCertificate, UnequalMatchingsCertificate,
                                 BadTripleCertificate, DisconnectedCertificate>;

inline bool validate_certificate(const Graph& g, const Certificate& cert) {
    const int n = g.vertex_count();
    auto in_range = [n](int v) { return v >= 0 && v < n; };
    if (const auto* claw = std::get_if<ClawCertificate>(&cert)) {
        if (!in_range(claw->center)) return false;
        for (int l : claw->leaves)
            if (!in_range(l) || l == claw->center || !g.adjacent(claw->center, l)) return false;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (claw->leaves[i] == claw->leaves[j] || g.adjacent(claw->leaves[i], claw->leaves[j]))
                    return false;
        return true;
    }
    if (const auto* um = std::get_if<UnequalMatchingsCertificate>(&cert)) {
        return is_maximal_matching(g, um->first) && is_maximal_matching(g, um->second) &&
               um->first.size() != um->second.size();
    }
    if (const auto* bad = std::get_if<BadTripleCertificate>(&cert)) {
        VertexSet s(bad->vertices.begin(), bad->vertices.end());
        std::sort(s.begin(), s.end());
        if (s[0] == s[1] || s[1] == s[2]) return false;
        for (int v : s)
            if (!in_range(v)) return false;
        if (!is_independent(g, s)) return false;
        return odd_even_component_counts(g, s).first < 2;
    }
    const auto& disc = std::get<DisconnectedCertificate>(cert);
    return disc.components.size() >= 2 && disc.components == connected_components(g);
}

// ---- claw detection ---------------------------------------------------

struct ClawFreeResult {
    bool claw_free = true;
    std::optional<ClawCertificate> claw;
};

// A claw is a vertex with three pairwise non-adjacent neighbors. Scans
// centers and leaf triples in lexicographic order, first hit wins.
inline ClawFreeResult is_claw_free(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto nb = g.neighbors(v);
        const int d = static_cast<int>(nb.size());
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (int k = j + 1; k < d; ++k)
                    if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k]))
                        return {false, ClawCertificate{v, {nb[i], nb[j], nb[k]}}};
            }
    }
    return {};
}

// ---- equimatchability, by definition ----------------------------------

struct BruteForceEquimatchable {
    bool overflow = false;
    bool equimatchable = false;
    std::optional<UnequalMatchingsCertificate> witness;  // set when refuted
};

inline BruteForceEquimatchable is_equimatchable_bruteforce(
    const Graph& g, std::uint64_t limit = kDefaultEnumerationLimit) {
    BruteForceEquimatchable out;
    std::optional<Matching> first;
    std::uint64_t count = 0;
    out.equimatchable = true;
    for_each_maximal_matching(g, [&](const Matching& m) {
        if (++count > limit) {
            out.overflow = true;
            return false;
        }
        if (!first) {
            first = m;
        } else if (m.size() != first->size()) {
            out.equimatchable = false;
            out.witness = UnequalMatchingsCertificate{*first, m};
            return false;
        }
        return true;
    });
    if (out.overflow) out.equimatchable = false;
    return out;
}

// ---- independence number ----------------------------------------------

inline constexpr int kIndependenceNumberMaxVertices = 40;

// Exact alpha(g) by branch and bound on bit masks; desk scale only.
inline int independence_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n >= kIndependenceNumberMaxVertices)
        throw std::invalid_argument("independence_number: gated below n = 40");
    if (n == 0) return 0;
    std::vector<std::uint64_t> nb(n);
    for (int v = 0; v < n; ++v) nb[v] = g.row(v)[0];
    auto rec = [&](auto&& self, std::uint64_t rem) -> int {
        if (!rem) return 0;
        int best = -1, best_deg = -1;
        for (std::uint64_t scan = rem; scan;) {
            const int v = std::countr_zero(scan);
            scan &= scan - 1;
            const int d = std::popcount(nb[v] & rem);
            if (d > best_deg) {
                best_deg = d;
                best = v;
            }
        }
        if (best_deg <= 1) {
            // Only isolated vertices and disjoint edges remain.
            int within = 0;
            for (std::uint64_t scan = rem; scan;) {
                const int v = std::countr_zero(scan);
                scan &= scan - 1;
                within += std::popcount(nb[v] & rem);
            }
            return std::popcount(rem) - within / 2;
        }
        const std::uint64_t vbit = std::uint64_t(1) << best;
        return std::max(self(self, rem & ~vbit), 1 + self(self, rem & ~(nb[best] | vbit)));
    };
    const std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    return rec(rec, all);
}

// alpha(g) <= 2 iff the complement is triangle-free; direct cubic scan over
// non-adjacent pairs with word-parallel common-non-neighbor tests, so it
// stays usable at any scale the recognizer handles.
inline bool alpha_at_most_2(const Graph& g) {
    const int n = g.vertex_count();
    const int words = g.words();
    std::vector<std::uint64_t> universe(std::max(words, 1), 0);
    for (int v = 0; v < n; ++v) universe[v / 64] |= std::uint64_t(1) << (v % 64);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            const std::uint64_t* ru = g.row(u);
            const std::uint64_t* rv = g.row(v);
            for (int w = 0; w < words; ++w) {
                std::uint64_t cand = ~(ru[w] | rv[w]) & universe[w];
                if (w == u / 64) cand &= ~(std::uint64_t(1) << (u % 64));
                if (w == v / 64) cand &= ~(std::uint64_t(1) << (v % 64));
                if (cand) return false;  // independent triple {u, v, w}
            }
        }
    }
    return true;
}

// ---- the structural criterion (claw-free odd graphs) -------------------

struct CriterionResult {
    bool equimatchable = false;
    std::optional<BadTripleCertificate> violation;
};

namespace detail {

// Number of odd components of the graph restricted to `alive`, single-word
// adjacency. Stops early once two are found.
inline bool at_least_two_odd_components_u64(const std::vector<std::uint64_t>& adj,
                                            std::uint64_t alive) {
    int odd = 0;
    while (alive) {
        const int start = std::countr_zero(alive);
        std::uint64_t comp = std::uint64_t(1) << start;
        std::uint64_t frontier = comp;
        while (frontier) {
            const int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            const std::uint64_t fresh = adj[v] & alive & ~comp;
            comp |= fresh;
            frontier |= fresh;
        }
        if (std::popcount(comp) % 2) {
            if (++odd >= 2) return true;
        }
        alive &= ~comp;
    }
    return false;
}

}  // namespace detail

// Structural criterion: a connected claw-free odd graph is equimatchable
// iff removing any independent 3-set leaves at least two odd components. Scans independent triples lexicographically; the first
// violating triple becomes the certificate.
inline CriterionResult criterion_equimatchable_cfodd(const Graph& g) {
    const int n = g.vertex_count();
    if (n % 2 == 0) throw std::invalid_argument("criterion_equimatchable_cfodd: graph must be odd");
    if (!is_connected(g)) throw std::invalid_argument("criterion_equimatchable_cfodd: graph must be connected");
    if (!is_claw_free(g).claw_free)
        throw std::invalid_argument("criterion_equimatchable_cfodd: graph must be claw-free");

    const bool small = g.words() <= 1;
    std::vector<std::uint64_t> adj;
    std::uint64_t all = 0;
    if (small) {
        adj.resize(n);
        for (int v = 0; v < n; ++v) adj[v] = g.row(v)[0];
        all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (g.adjacent(i, j)) continue;
            for (int k = j + 1; k < n; ++k) {
                if (g.adjacent(i, k) || g.adjacent(j, k)) continue;
                bool ok;
                if (small) {
                    const std::uint64_t removed = (std::uint64_t(1) << i) | (std::uint64_t(1) << j) |
                                                  (std::uint64_t(1) << k);
                    ok = detail::at_least_two_odd_components_u64(adj, all & ~removed);
                } else {
                    ok = odd_even_component_counts(g, {i, j, k}).first >= 2;
                }
                if (!ok) return {false, BadTripleCertificate{{i, j, k}}};
            }
        }
    }
    return {true, std::nullopt};
}

// ---- exposed-count profile ---------------------------------------------

struct ExposedProfile {
    std::set<int> counts;  // { n - 2|M| : M maximal }
    bool overflow = false;
};

inline ExposedProfile exposed_count_profile(const Graph& g,
                                            std::uint64_t limit = kDefaultEnumerationLimit) {
    ExposedProfile out;
    std::uint64_t count = 0;
    const int n = g.vertex_count();
    for_each_maximal_matching(g, [&](const Matching& m) {
        if (++count > limit) {
            out.overflow = true;
            return false;
        }
        out.counts.insert(n - 2 * static_cast<int>(m.size()));
        return true;
    });
    return out;
}

}  // namespace cfeg
