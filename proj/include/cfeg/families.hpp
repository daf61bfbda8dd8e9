#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfeg/graph.hpp"
#include "cfeg/isomorphism.hpp"

namespace cfeg {

// The eleven cases of the characterization. Classification precedence is
// the enumeration order below; the recognizer reports the first match.
enum class FamilyId {
    EvenClique,
    C4,
    AlphaLe2,
    C7,
    G11,
    G12,
    G13,
    G21,
    G22,
    G23,
    G3,
};

inline constexpr std::array<FamilyId, 11> kClassificationOrder = {
    FamilyId::EvenClique, FamilyId::C4,  FamilyId::AlphaLe2, FamilyId::C7,
    FamilyId::G11,        FamilyId::G12, FamilyId::G13,      FamilyId::G21,
    FamilyId::G22,        FamilyId::G23, FamilyId::G3,
};

// The blow-up families tried against the twin-free quotient.
inline constexpr std::array<FamilyId, 6> kBlowUpFamilies = {
    FamilyId::G12, FamilyId::G13, FamilyId::G21, FamilyId::G22, FamilyId::G23, FamilyId::G3,
};

inline const char* family_name(FamilyId id) {
    switch (id) {
        case FamilyId::EvenClique: return "EVEN_CLIQUE";
        case FamilyId::C4: return "C4";
        case FamilyId::AlphaLe2: return "ALPHA_LE_2";
        case FamilyId::C7: return "C7";
        case FamilyId::G11: return "G11";
        case FamilyId::G12: return "G12";
        case FamilyId::G13: return "G13";
        case FamilyId::G21: return "G21";
        case FamilyId::G22: return "G22";
        case FamilyId::G23: return "G23";
        case FamilyId::G3: return "G3";
    }
    return "?";
}

inline std::optional<FamilyId> family_from_name(const std::string& name) {
    for (FamilyId id : kClassificationOrder)
        if (name == family_name(id)) return id;
    return std::nullopt;
}

// A base graph of a blow-up family: vertex roles follow the defining
// structures (cut vertices, cliques, attachment blobs); zero_slot marks the
// single position whose multiplicity range includes 0, -1 if none.
struct BaseGraph {
    FamilyId id = FamilyId::G3;
    Graph graph;
    std::vector<std::string> roles;
    int zero_slot = -1;
};

inline const BaseGraph& base_graph(FamilyId id) {
    static const auto make = [](FamilyId fid, int n, std::vector<std::pair<int, int>> edges,
                                std::vector<std::string> roles, int zero) {
        BaseGraph b;
        b.id = fid;
        b.graph = Graph::from_edges(n, edges);
        b.roles = std::move(roles);
        b.zero_slot = zero;
        return b;
    };
    // G11: cut vertex attached to an adjacent pair of each of two 4-cycles.
    static const BaseGraph g11 = make(
        FamilyId::G11, 9,
        {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 6}, {6, 7}, {7, 8}, {8, 5}, {0, 1}, {0, 2}, {0, 5}, {0, 6}},
        {"v", "c1", "c2", "c3", "c4", "d1", "d2", "d3", "d4"}, -1);
    // G12: cut vertex between two even cliques; the base is a P5.
    static const BaseGraph g12 = make(FamilyId::G12, 5, {{0, 1}, {3, 4}, {2, 0}, {2, 4}},
                                      {"G1-nbr", "G1-rest", "v", "G2-rest", "G2-nbr"}, -1);
    // G13: cut vertex between an even clique and a 4-cycle; slot 0 is the
    // non-neighbor part of the clique and may be empty.
    static const BaseGraph g13 = make(
        FamilyId::G13, 7, {{0, 1}, {2, 1}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {6, 3}},
        {"G1-rest", "G1-nbr", "v", "c1", "c2", "c3", "c4"}, 0);
    // G21: a 4-cycle whose adjacent pair u1,u2 attaches to one part of an
    // odd clique (u5 = attachment part, u6 = remainder).
    static const BaseGraph g21 =
        make(FamilyId::G21, 6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {0, 4}, {1, 4}},
             {"v1", "v2", "v3", "v4", "V1-attach", "V1-rest"}, -1);
    // G22: independent 2-cut {s1,s2} complete to the odd clique B, with
    // disjoint attachments into the even clique A.
    static const BaseGraph g22 =
        make(FamilyId::G22, 6, {{0, 1}, {0, 2}, {1, 2}, {3, 1}, {4, 2}, {3, 5}, {4, 5}},
             {"A-rest", "A-nbr-s1", "A-nbr-s2", "s1", "s2", "B"}, -1);
    // G23: P4 s1-a-b-s2 over an odd clique B covered by N(s1) and N(s2);
    // slot 6 is the shared part of B and may be empty.
    static const BaseGraph g23 = make(
        FamilyId::G23, 7,
        {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {0, 4}, {0, 6}, {3, 5}, {3, 6}},
        {"s1", "a", "b", "s2", "B-only-s1", "B-only-s2", "B-shared"}, 6);
    // G3: independent 3-cut {s1,s2,s3} between odd cliques A = blob(1)+a and
    // A' = blob(5)+a', with N(s1) = A+a', N(s2) = A'+a, N(s3) = rest.
    static const BaseGraph g3 = make(
        FamilyId::G3, 7,
        {{0, 1}, {5, 6}, {2, 0}, {2, 1}, {2, 6}, {4, 0}, {4, 5}, {4, 6}, {3, 1}, {3, 5}},
        {"a", "A-rest", "s1", "s3", "s2", "A'-rest", "a'"}, -1);
    switch (id) {
        case FamilyId::G11: return g11;
        case FamilyId::G12: return g12;
        case FamilyId::G13: return g13;
        case FamilyId::G21: return g21;
        case FamilyId::G22: return g22;
        case FamilyId::G23: return g23;
        case FamilyId::G3: return g3;
        default: throw std::invalid_argument("base_graph: not a blow-up family");
    }
}

// Blow-up: each base vertex i becomes a clique of multiplicities[i] vertices,
// every member adjacent to all members of neighbor blobs. Multiplicity 0
// deletes the vertex.
inline Graph expand(const Graph& base, const std::vector<int>& multiplicities) {
    if (static_cast<int>(multiplicities.size()) != base.vertex_count())
        throw std::invalid_argument("expand: multiplicity vector length mismatch");
    int total = 0;
    std::vector<int> offset(multiplicities.size());
    for (std::size_t i = 0; i < multiplicities.size(); ++i) {
        if (multiplicities[i] < 0) throw std::invalid_argument("expand: negative multiplicity");
        offset[i] = total;
        total += multiplicities[i];
    }
    Graph g(total);
    for (int i = 0; i < base.vertex_count(); ++i)
        for (int a = 0; a < multiplicities[i]; ++a)
            for (int b = a + 1; b < multiplicities[i]; ++b)
                g.add_edge(offset[i] + a, offset[i] + b);
    for (int i = 0; i < base.vertex_count(); ++i)
        for (int j = i + 1; j < base.vertex_count(); ++j) {
            if (!base.adjacent(i, j)) continue;
            for (int a = 0; a < multiplicities[i]; ++a)
                for (int b = 0; b < multiplicities[j]; ++b)
                    g.add_edge(offset[i] + a, offset[j] + b);
        }
    return g;
}

// Parameters of one characterized family. Unused fields stay 0; p2/x2 are
// the primed parameters of G12.
struct FamilyParams {
    FamilyId id = FamilyId::EvenClique;
    int p = 0, q = 0, x = 0, y = 0, p2 = 0, x2 = 0;

    // Parameters in the family's documented field order, for reporting and
    // lexicographic tie-breaking across isomorphisms.
    std::vector<std::pair<const char*, int>> fields() const {
        switch (id) {
            case FamilyId::EvenClique: return {{"p", p}};
            case FamilyId::G3: return {{"p", p}, {"q", q}};
            case FamilyId::G21: return {{"x", x}, {"q", q}};
            case FamilyId::G22: return {{"p", p}, {"q", q}, {"x", x}, {"y", y}};
            case FamilyId::G23: return {{"q", q}, {"x", x}, {"y", y}};
            case FamilyId::G12: return {{"p", p}, {"x", x}, {"p'", p2}, {"x'", x2}};
            case FamilyId::G13: return {{"p", p}, {"x", x}};
            default: return {};
        }
    }

    std::vector<int> value_tuple() const {
        std::vector<int> t;
        for (auto [name, v] : fields()) t.push_back(v);
        return t;
    }

    bool operator==(const FamilyParams& o) const {
        return id == o.id && value_tuple() == o.value_tuple();
    }
    bool operator<(const FamilyParams& o) const {
        if (id != o.id) return static_cast<int>(id) < static_cast<int>(o.id);
        return value_tuple() < o.value_tuple();
    }
};

inline std::string to_string(const FamilyParams& fp) {
    std::string s = family_name(fp.id);
    auto fields = fp.fields();
    if (fields.empty()) return s;
    s += "(";
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) s += ",";
        s += std::string(fields[i].first) + "=" + std::to_string(fields[i].second);
    }
    return s + ")";
}

// Throws std::invalid_argument naming the violated constraint.
inline void validate(const FamilyParams& fp) {
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument(std::string(family_name(fp.id)) + ": " + what);
    };
    switch (fp.id) {
        case FamilyId::EvenClique:
            if (fp.p < 1) fail("p >= 1");
            break;
        case FamilyId::C4:
        case FamilyId::C7:
        case FamilyId::G11:
            break;
        case FamilyId::AlphaLe2:
            fail("predicate class, not generable");
            break;
        case FamilyId::G3:
            if (fp.p < 1 || fp.q < 1) fail("p,q >= 1");
            break;
        case FamilyId::G21:
            if (fp.q < 1) fail("q >= 1");
            if (fp.x < 2 || fp.x > 2 * fp.q) fail("2 <= x <= 2q");
            break;
        case FamilyId::G22:
            if (fp.p < 1) fail("p >= 1");
            if (fp.q < 0) fail("q >= 0");
            if (fp.x < 1 || fp.y < 1) fail("x,y >= 1");
            if (fp.x + fp.y > 2 * fp.p - 1) fail("x+y <= 2p-1");
            break;
        case FamilyId::G23:
            if (fp.q < 1) fail("q >= 1");
            if (fp.x < 1 || fp.y < 1) fail("x,y >= 1");
            if (fp.x + fp.y > 2 * fp.q + 1) fail("x+y <= 2q+1");
            break;
        case FamilyId::G12:
            if (fp.p < 1) fail("p >= 1");
            if (fp.p2 < 1) fail("p' >= 1");
            if (fp.x < 1 || fp.x > 2 * fp.p - 1) fail("1 <= x <= 2p-1");
            if (fp.x2 < 1 || fp.x2 > 2 * fp.p2 - 1) fail("1 <= x' <= 2p'-1");
            break;
        case FamilyId::G13:
            if (fp.p < 1) fail("p >= 1");
            if (fp.x < 0 || fp.x > 2 * fp.p - 1) fail("0 <= x <= 2p-1");
            break;
    }
}

// The multiplicity vector of the family equation, aligned to base order.
inline std::vector<int> multiplicity_vector(const FamilyParams& fp) {
    validate(fp);
    switch (fp.id) {
        case FamilyId::G3: return {1, 2 * fp.p, 1, 1, 1, 2 * fp.q, 1};
        case FamilyId::G21: return {1, 1, 1, 1, fp.x, 2 * fp.q + 1 - fp.x};
        case FamilyId::G22: return {2 * fp.p - fp.x - fp.y, fp.x, fp.y, 1, 1, 2 * fp.q + 1};
        case FamilyId::G23: return {1, 1, 1, 1, fp.x, fp.y, 2 * fp.q + 1 - fp.x - fp.y};
        case FamilyId::G12: return {fp.x, 2 * fp.p - fp.x, 1, 2 * fp.p2 - fp.x2, fp.x2};
        case FamilyId::G13: return {fp.x, 2 * fp.p - fp.x, 1, 1, 1, 1, 1};
        case FamilyId::G11: return std::vector<int>(9, 1);
        default: throw std::invalid_argument("multiplicity_vector: not a blow-up family");
    }
}

inline Graph generate(const FamilyParams& fp) {
    validate(fp);
    switch (fp.id) {
        case FamilyId::EvenClique: return Graph::complete(2 * fp.p);
        case FamilyId::C4: return Graph::cycle(4);
        case FamilyId::C7: return Graph::cycle(7);
        default: return expand(base_graph(fp.id).graph, multiplicity_vector(fp));
    }
}

// Recovers family parameters from a multiplicity vector aligned to the base
// vertex order (all slots present; 0 only at the family's zero slot).
// Returns nullopt when the vector does not fit the family equation, parity
// constraints included.
inline std::optional<FamilyParams> pattern_match(FamilyId id, const std::vector<int>& m) {
    auto ones = [&](int from, int to) {
        for (int i = from; i <= to; ++i)
            if (m[i] != 1) return false;
        return true;
    };
    FamilyParams fp;
    fp.id = id;
    switch (id) {
        case FamilyId::G3:
            if (m.size() != 7) throw std::invalid_argument("pattern_match: G3 expects 7 slots");
            if (m[0] != 1 || !ones(2, 4) || m[6] != 1) return std::nullopt;
            if (m[1] < 2 || m[1] % 2 || m[5] < 2 || m[5] % 2) return std::nullopt;
            fp.p = m[1] / 2;
            fp.q = m[5] / 2;
            return fp;
        case FamilyId::G21:
            if (m.size() != 6) throw std::invalid_argument("pattern_match: G21 expects 6 slots");
            if (!ones(0, 3) || m[4] < 2 || m[5] < 1 || (m[4] + m[5]) % 2 == 0) return std::nullopt;
            fp.x = m[4];
            fp.q = (m[4] + m[5] - 1) / 2;
            return fp;
        case FamilyId::G22:
            if (m.size() != 6) throw std::invalid_argument("pattern_match: G22 expects 6 slots");
            if (m[3] != 1 || m[4] != 1) return std::nullopt;
            if (m[0] < 1 || m[1] < 1 || m[2] < 1 || (m[0] + m[1] + m[2]) % 2) return std::nullopt;
            if (m[5] < 1 || m[5] % 2 == 0) return std::nullopt;
            fp.p = (m[0] + m[1] + m[2]) / 2;
            fp.q = (m[5] - 1) / 2;
            fp.x = m[1];
            fp.y = m[2];
            return fp;
        case FamilyId::G23: {
            if (m.size() != 7) throw std::invalid_argument("pattern_match: G23 expects 7 slots");
            if (!ones(0, 3) || m[4] < 1 || m[5] < 1 || m[6] < 0) return std::nullopt;
            const int b = m[4] + m[5] + m[6];
            if (b % 2 == 0 || b < 3) return std::nullopt;
            fp.q = (b - 1) / 2;
            fp.x = m[4];
            fp.y = m[5];
            return fp;
        }
        case FamilyId::G12:
            if (m.size() != 5) throw std::invalid_argument("pattern_match: G12 expects 5 slots");
            if (m[2] != 1 || m[0] < 1 || m[1] < 1 || m[3] < 1 || m[4] < 1) return std::nullopt;
            if ((m[0] + m[1]) % 2 || (m[3] + m[4]) % 2) return std::nullopt;
            fp.p = (m[0] + m[1]) / 2;
            fp.x = m[0];
            fp.p2 = (m[3] + m[4]) / 2;
            fp.x2 = m[4];
            return fp;
        case FamilyId::G13:
            if (m.size() != 7) throw std::invalid_argument("pattern_match: G13 expects 7 slots");
            if (m[0] < 0 || m[1] < 1 || !ones(2, 6)) return std::nullopt;
            if ((m[0] + m[1]) % 2) return std::nullopt;
            fp.p = (m[0] + m[1]) / 2;
            fp.x = m[0];
            return fp;
        case FamilyId::G11:
            if (m.size() != 9) throw std::invalid_argument("pattern_match: G11 expects 9 slots");
            if (!ones(0, 8)) return std::nullopt;
            return fp;
        default:
            throw std::invalid_argument("pattern_match: not a blow-up family");
    }
}

// ---- definitional membership (reference procedure, test scale) ----------

namespace detail {

inline VertexSet neighbors_within(const Graph& g, int v, const VertexSet& set) {
    VertexSet out;
    for (int u : set)
        if (g.adjacent(v, u)) out.push_back(u);
    return out;
}

inline bool is_odd_clique(const Graph& g, const VertexSet& s) {
    return s.size() % 2 == 1 && is_clique(g, s);
}

inline bool is_even_clique(const Graph& g, const VertexSet& s) {
    return !s.empty() && s.size() % 2 == 0 && is_clique(g, s);
}

inline bool induces_c4(const Graph& g, const VertexSet& s) {
    return s.size() == 4 && is_cycle_c4(induced_subgraph(g, s).graph);
}

// N(v) restricted to a C4 consists of two adjacent cycle vertices.
inline bool attaches_to_adjacent_pair(const Graph& g, int v, const VertexSet& c4) {
    auto nb = neighbors_within(g, v, c4);
    return nb.size() == 2 && g.adjacent(nb[0], nb[1]);
}

inline bool set_equal(VertexSet a, VertexSet b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

}  // namespace detail

// Searches directly for the witness structure of the family's definition
// (cut vertex / independent 2-cut / independent 3-cut / partition with the
// listed properties), with no twin reduction. Exponential in spots, fine at
// test scale. Only blow-up families other than G11 are definitional.
inline bool membership_by_definition(const Graph& g, FamilyId id) {
    const int n = g.vertex_count();
    if (!is_connected(g)) return false;

    switch (id) {
        case FamilyId::G12: {
            for (int v = 0; v < n; ++v) {
                auto comps = connected_components(delete_vertex(g, v).graph);
                if (comps.size() != 2) continue;
                auto sub = delete_vertex(g, v);
                VertexSet c0, c1;
                for (int i : comps[0]) c0.push_back(sub.original[i]);
                for (int i : comps[1]) c1.push_back(sub.original[i]);
                if (!detail::is_even_clique(g, c0) || !detail::is_even_clique(g, c1)) continue;
                // v needs a non-neighbor in each clique.
                if (detail::neighbors_within(g, v, c0).size() == c0.size()) continue;
                if (detail::neighbors_within(g, v, c1).size() == c1.size()) continue;
                return true;
            }
            return false;
        }
        case FamilyId::G13: {
            for (int v = 0; v < n; ++v) {
                auto sub = delete_vertex(g, v);
                auto comps = connected_components(sub.graph);
                if (comps.size() != 2) continue;
                for (int which = 0; which < 2; ++which) {
                    VertexSet cyc, cliq;
                    for (int i : comps[which]) cyc.push_back(sub.original[i]);
                    for (int i : comps[1 - which]) cliq.push_back(sub.original[i]);
                    if (!detail::induces_c4(g, cyc) || !detail::attaches_to_adjacent_pair(g, v, cyc))
                        continue;
                    if (!detail::is_even_clique(g, cliq)) continue;
                    return true;
                }
            }
            return false;
        }
        case FamilyId::G21: {
            if (n < 7) return false;
            auto try_quad = [&](const VertexSet& q4) {
                if (!detail::induces_c4(g, q4)) return false;
                VertexSet rest;
                std::vector<char> in_q(n, 0);
                for (int v : q4) in_q[v] = 1;
                for (int v = 0; v < n; ++v)
                    if (!in_q[v]) rest.push_back(v);
                if (rest.size() < 3 || !detail::is_odd_clique(g, rest)) return false;
                // Orient the cycle, then test each adjacent pair as (v1, v2).
                const VertexSet& c = q4;
                std::array<std::array<int, 4>, 4> pairs{};
                int m = 0;
                for (int i = 0; i < 4; ++i)
                    for (int j = i + 1; j < 4; ++j) {
                        if (!g.adjacent(c[i], c[j])) continue;
                        int others[2], t = 0;
                        for (int k = 0; k < 4; ++k)
                            if (k != i && k != j) others[t++] = c[k];
                        pairs[m++] = {c[i], c[j], others[0], others[1]};
                    }
                for (int i = 0; i < m; ++i) {
                    auto [v1, v2, v3, v4] = pairs[i];
                    auto n1 = detail::neighbors_within(g, v1, rest);
                    if (n1.size() < 2 || n1.size() >= rest.size()) continue;
                    if (!detail::set_equal(n1, detail::neighbors_within(g, v2, rest))) continue;
                    if (!detail::neighbors_within(g, v3, rest).empty()) continue;
                    if (!detail::neighbors_within(g, v4, rest).empty()) continue;
                    return true;
                }
                return false;
            };
            // All 4-subsets, lexicographic.
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    for (int c = b + 1; c < n; ++c)
                        for (int d = c + 1; d < n; ++d)
                            if (try_quad({a, b, c, d})) return true;
            return false;
        }
        case FamilyId::G22: {
            for (int s1 = 0; s1 < n; ++s1)
                for (int s2 = s1 + 1; s2 < n; ++s2) {
                    if (g.adjacent(s1, s2)) continue;
                    auto sub = delete_vertices(g, {s1, s2});
                    auto comps = connected_components(sub.graph);
                    if (comps.size() != 2) continue;
                    for (int which = 0; which < 2; ++which) {
                        VertexSet a, b;
                        for (int i : comps[which]) a.push_back(sub.original[i]);
                        for (int i : comps[1 - which]) b.push_back(sub.original[i]);
                        if (!detail::is_even_clique(g, a) || !detail::is_odd_clique(g, b)) continue;
                        if (detail::neighbors_within(g, s1, b).size() != b.size()) continue;
                        if (detail::neighbors_within(g, s2, b).size() != b.size()) continue;
                        auto na1 = detail::neighbors_within(g, s1, a);
                        auto na2 = detail::neighbors_within(g, s2, a);
                        VertexSet inter;
                        std::set_intersection(na1.begin(), na1.end(), na2.begin(), na2.end(),
                                              std::back_inserter(inter));
                        if (!inter.empty()) continue;
                        if (na1.size() + na2.size() >= a.size()) continue;  // union must be proper
                        return true;
                    }
                }
            return false;
        }
        case FamilyId::G23: {
            for (int s1 = 0; s1 < n; ++s1)
                for (int s2 = s1 + 1; s2 < n; ++s2) {
                    if (g.adjacent(s1, s2)) continue;
                    auto sub = delete_vertices(g, {s1, s2});
                    auto comps = connected_components(sub.graph);
                    if (comps.size() != 2) continue;
                    for (int which = 0; which < 2; ++which) {
                        VertexSet a, b;
                        for (int i : comps[which]) a.push_back(sub.original[i]);
                        for (int i : comps[1 - which]) b.push_back(sub.original[i]);
                        if (a.size() != 2 || !g.adjacent(a[0], a[1])) continue;
                        VertexSet p4 = {s1, s2, a[0], a[1]};
                        auto ind = induced_subgraph(g, p4).graph;
                        if (ind.edge_count() != 3) continue;
                        if (!isomorphic_small(ind, Graph::path(4))) continue;
                        if (b.size() < 3 || !detail::is_odd_clique(g, b)) continue;
                        auto nb1 = detail::neighbors_within(g, s1, b);
                        auto nb2 = detail::neighbors_within(g, s2, b);
                        VertexSet uni;
                        std::set_union(nb1.begin(), nb1.end(), nb2.begin(), nb2.end(),
                                       std::back_inserter(uni));
                        if (uni.size() != b.size()) continue;
                        return true;
                    }
                }
            return false;
        }
        case FamilyId::G3: {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    if (g.adjacent(i, j)) continue;
                    for (int k = j + 1; k < n; ++k) {
                        if (g.adjacent(i, k) || g.adjacent(j, k)) continue;
                        auto sub = delete_vertices(g, {i, j, k});
                        auto comps = connected_components(sub.graph);
                        if (comps.size() != 2) continue;
                        VertexSet comp_a, comp_b;
                        for (int t : comps[0]) comp_a.push_back(sub.original[t]);
                        for (int t : comps[1]) comp_b.push_back(sub.original[t]);
                        if (!detail::is_odd_clique(g, comp_a) || !detail::is_odd_clique(g, comp_b))
                            continue;
                        const std::array<int, 3> triple{i, j, k};
                        for (int s3_pos = 0; s3_pos < 3; ++s3_pos) {
                            const int s3 = triple[s3_pos];
                            int rest[2], nrest = 0;
                            for (int idx = 0; idx < 3; ++idx)
                                if (idx != s3_pos) rest[nrest++] = triple[idx];
                            // Swapping s1/s2 also covers the A/A' swap.
                            for (int flip = 0; flip < 2; ++flip) {
                                const int s1 = rest[flip], s2 = rest[1 - flip];
                                // N(s1) = A + a', N(s2) = A' + a, N(s3) = A u A' - {a, a'}.
                                auto in_a1 = detail::neighbors_within(g, s1, comp_a);
                                auto out_a1 = detail::neighbors_within(g, s1, comp_b);
                                if (in_a1.size() != comp_a.size() || out_a1.size() != 1) continue;
                                auto in_a2 = detail::neighbors_within(g, s2, comp_b);
                                auto out_a2 = detail::neighbors_within(g, s2, comp_a);
                                if (in_a2.size() != comp_b.size() || out_a2.size() != 1) continue;
                                const int a = out_a2[0], a_prime = out_a1[0];
                                VertexSet expect;
                                for (int t : comp_a)
                                    if (t != a) expect.push_back(t);
                                for (int t : comp_b)
                                    if (t != a_prime) expect.push_back(t);
                                std::sort(expect.begin(), expect.end());
                                VertexSet ns3 = g.neighbors(s3);
                                if (detail::set_equal(expect, ns3)) return true;
                            }
                        }
                    }
                }
            return false;
        }
        default:
            throw std::invalid_argument("membership_by_definition: not a parameterized family");
    }
}

}  // namespace cfeg
